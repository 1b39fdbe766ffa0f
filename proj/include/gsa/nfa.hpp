// Nondeterministic finite automata with ε-moves.
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsa/core.hpp"
#include "gsa/grammar.hpp"
#include "gsa/grammar_assembly.hpp"

namespace gsa {

using StateId = std::size_t;

struct Transition {
  StateId from;
  std::optional<Symbol> label;  // nullopt is ε
  StateId to;

  auto operator<=>(const Transition&) const = default;
};

using StateSet = std::set<StateId>;

/// NFA with one start state, any number of finals, and ε-transitions.
/// States are dense indices; each carries a name that is unique within the
/// automaton and used by the text format.
class Nfa {
 public:
  /// Adds a state; an empty name becomes `q<index>`. Names are made unique
  /// by suffixing.
  StateId add_state(std::string name = {});
  void add_transition(StateId from, std::optional<Symbol> label, StateId to);
  void set_start(StateId s);
  void add_final(StateId s);
  void add_symbol(Symbol a) { alphabet_.insert(a); }

  std::size_t size() const noexcept { return names_.size(); }
  StateId start() const noexcept { return start_; }
  const StateSet& finals() const noexcept { return finals_; }
  bool is_final(StateId s) const { return finals_.count(s) > 0; }
  const std::set<Transition>& transitions() const noexcept { return transitions_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& name(StateId s) const { return names_.at(s); }
  std::optional<StateId> find_state(const std::string& name) const;

  /// Outgoing transitions of `s`, in label order.
  std::vector<Transition> out(StateId s) const;

  /// Free-form metadata, emitted as header comments.
  std::vector<std::string> notes;

 private:
  void check(StateId s) const;

  std::vector<std::string> names_;
  std::set<std::string> name_set_;
  std::set<Transition> transitions_;
  std::vector<std::vector<Transition>> out_;
  StateSet finals_;
  Alphabet alphabet_;
  StateId start_ = 0;
};

StateSet epsilon_closure(const Nfa& m, StateSet states);
StateSet step(const Nfa& m, const StateSet& states, Symbol a);

bool accepts(const Nfa& m, std::string_view w);

/// { w in L(m) : |w| <= max_len }.
FiniteLanguage enumerate_nfa(const Nfa& m, std::size_t max_len);

/// States reachable from the start / states from which a final is reachable.
StateSet accessible_states(const Nfa& m);
StateSet coaccessible_states(const Nfa& m);

/// Symbols on transitions that lie on some accepting path.
Alphabet useful_symbols(const Nfa& m);

/// Accepts Pref(L(m)): every co-accessible state becomes final.
Nfa prefix_closure(const Nfa& m);
/// Accepts Suff(L(m)): a fresh start with ε-moves to every accessible state.
Nfa suffix_closure(const Nfa& m);

/// Accepts L(a) ∪ L(b) ∪ ... through a fresh start.
Nfa union_nfa(const std::vector<Nfa>& parts);
/// Accepts L(a) · L(b).
Nfa concat_nfa(const Nfa& a, const Nfa& b);
/// Accepts the words of L(m) whose last symbol is `a`.
Nfa ending_with(const Nfa& m, Symbol a);
/// Accepts { v : a v in L(m) }.
Nfa left_quotient(const Nfa& m, Symbol a);
/// Accepts the words of L(m) containing a symbol of `symbols`.
Nfa containing_any(const Nfa& m, const Alphabet& symbols);

/// Exact single-crossover self-assembly language of L(m1) and L(m2), built
/// from prefix and suffix closures joined on each shared symbol.
Nfa crossover_nfa(const Nfa& m1, const Nfa& m2,
                  ParentInclusion parents = ParentInclusion::SharedSymbol);

/// Copy of `m` whose state names avoid `taken`; the new names are added.
Nfa rename_apart(const Nfa& m, std::set<std::string>& taken);

/// Self-assembly of two automata. Paper mode is the literal edge-overlap
/// construction; SingleCrossover mode uses phase-tagged state copies.
Nfa assemble_nfas(const Nfa& m1, const Nfa& m2, AssemblyMode mode,
                  ParentInclusion parents = ParentInclusion::SharedSymbol);

/// Accepting run on `w` as alternating state names and labels, e.g.
/// `q0 -ε-> S1 -a-> S1 -b-> F`.
std::optional<std::string> accepting_path(const Nfa& m, std::string_view w);

/// Nonterminals become states; A -> a B is an a-edge, A -> a an a-edge into
/// a fresh accepting sink, A -> @eps makes A final.
/// Throws GrammarError{NotRightLinear} when a tail is longer than one.
Nfa grammar_to_nfa(const HeadNormalGrammar& g);

/// Trie automaton accepting exactly `lang`; its alphabet is lang.alphabet().
Nfa nfa_from_words(const FiniteLanguage& lang);

/// States become nonterminals Q<i>; ε-moves are closed over first.
HeadNormalGrammar nfa_to_grammar(const Nfa& m);

}  // namespace gsa
