// Self-assembly of two head-normal grammars.
#pragma once

#include "gsa/grammar.hpp"

namespace gsa {

enum class AssemblyMode {
  /// Literal construction: cross productions A -> a g2, A' -> a g1 are added
  /// alongside the originals, so a derivation may switch parents many times.
  Paper,
  /// Phase-tagged construction that permits exactly one switch.
  SingleCrossover,
};

const char* to_string(AssemblyMode m);
AssemblyMode parse_mode(std::string_view text);

/// Renames every nonterminal of `g` that occurs in `taken` by a deterministic
/// suffix. The renamed names are added to `taken`.
HeadNormalGrammar rename_apart(const HeadNormalGrammar& g, std::set<Nonterminal>& taken);

/// Assembles g1 and g2. The unit rules S -> S1 | S2 of the literal
/// construction are realized by copying every production of S1 and S2 onto
/// the fresh start S.
///
/// Output class is RIGHT_LINEAR when both inputs are right-linear; otherwise
/// GNF. In SingleCrossover mode with non-right-linear inputs the suffix side
/// of the crossover is brought into GNF by cfg_to_gnf.
HeadNormalGrammar assemble_grammars(const HeadNormalGrammar& g1, const HeadNormalGrammar& g2,
                                    AssemblyMode mode,
                                    ParentInclusion parents = ParentInclusion::SharedSymbol);

}  // namespace gsa
