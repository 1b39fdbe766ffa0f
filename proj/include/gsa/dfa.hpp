// Complete deterministic automata and the exact language algebra used for
// equivalence and inclusion checks.
#pragma once

#include <optional>
#include <vector>

#include "gsa/nfa.hpp"

namespace gsa {

/// Total DFA over an explicit alphabet. State 0 is the start.
struct Dfa {
  std::vector<Symbol> alphabet;                 // sorted
  std::vector<std::vector<std::size_t>> delta;  // delta[state][symbol index]
  std::vector<bool> accepting;

  std::size_t size() const noexcept { return delta.size(); }
  std::size_t symbol_index(Symbol a) const;
  bool accepts(std::string_view w) const;
};

/// Subset construction over `alphabet` (defaults to m.alphabet()), totalized
/// by a sink state.
Dfa determinize(const Nfa& m, const Alphabet& alphabet);
Dfa determinize(const Nfa& m);

Dfa complement(const Dfa& d);
/// Both operands must share the alphabet.
Dfa intersect(const Dfa& a, const Dfa& b);

/// Shortest accepted word, smallest in canonical order among the shortest.
std::optional<Word> shortest_word(const Dfa& d);
bool is_empty(const Dfa& d);

Nfa to_nfa(const Dfa& d);

/// A shortest word of L(a) \ L(b), or nullopt when L(a) ⊆ L(b).
std::optional<Word> inclusion_counterexample(const Nfa& a, const Nfa& b);

struct Equivalence {
  bool equal = true;
  std::optional<Word> witness;
  /// 1 when the witness is accepted only by the first machine, 2 when only
  /// by the second.
  int accepted_by = 0;
};

/// Symmetric-difference emptiness; the witness is shortest, canonical-least.
Equivalence equivalent(const Nfa& a, const Nfa& b);

}  // namespace gsa
