// Normalization passes into head-normal form.
#pragma once

#include "gsa/grammar.hpp"

namespace gsa {

struct NormalizeOptions {
  /// Keep ε in the language through a fresh start with S -> @eps. When false,
  /// a grammar whose language contains ε is rejected.
  bool allow_start_epsilon = false;
};

/// Right-linear grammar (every rhs is a terminal word optionally followed by
/// one nonterminal) to head-normal RIGHT_LINEAR form. Terminal words are split
/// letterwise through fresh nonterminals; unit and ε-productions are
/// eliminated.
HeadNormalGrammar normalize_right_linear(const Cfg& g, NormalizeOptions options = {});

/// ε-free context-free grammar to Greibach normal form.
/// Throws GrammarError{EpsilonProduction} on ε-productions and
/// GrammarError{EmptyLanguage} when the start symbol generates nothing.
HeadNormalGrammar cfg_to_gnf(const Cfg& g);

/// Grammar for L(g) \ {ε} without ε-productions.
Cfg remove_epsilon_productions(const Cfg& g);

/// Removes non-generating, then unreachable nonterminals.
Cfg trim(const Cfg& g);

/// Rejects anything that is not right-linear with word prefixes.
bool is_right_linear(const Cfg& g);

/// Head-normal form of `g`: kept as is when already head-normal, otherwise
/// normalize_right_linear for right-linear input and cfg_to_gnf for the rest.
HeadNormalGrammar to_head_normal(const Cfg& g, NormalizeOptions options = {});

}  // namespace gsa
