// Head-normal grammars (every production A -> a B1..Bk) and general
// context-free grammars.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gsa/core.hpp"

namespace gsa {

using Nonterminal = std::string;

/// True iff `name` matches [A-Z][A-Za-z0-9_]*.
bool is_nonterminal_name(std::string_view name);

/// Returns `base` if unused, else the first `base_N` not in `used`; the result
/// is inserted into `used`.
Nonterminal fresh_nonterminal(const std::string& base, std::set<Nonterminal>& used);

class GrammarError : public std::invalid_argument {
 public:
  enum class Kind {
    Malformed,
    NotRightLinear,
    NotHeadNormal,
    EpsilonProduction,
    EpsilonInLanguage,
    EmptyLanguage,
  };

  GrammarError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A -> head tail, head a terminal (or ε for the degenerate A -> ε).
struct Production {
  Nonterminal lhs;
  std::optional<Symbol> head;
  std::vector<Nonterminal> tail;

  auto operator<=>(const Production&) const = default;
};

std::string to_string(const Production& p);

enum class GrammarClass { RightLinear, Gnf };

const char* to_string(GrammarClass c);

/// Grammar in head-normal form. Covers right-linear grammars (tails of length
/// at most one) and Greibach normal form under one representation.
///
/// A production with an ε head must have an empty tail, and its left-hand
/// side may not occur in any tail; this keeps ε confined to the top level.
class HeadNormalGrammar {
 public:
  HeadNormalGrammar() = default;
  /// Nonterminals and terminals default to those mentioned by the start and
  /// the productions. Throws GrammarError when an invariant fails.
  HeadNormalGrammar(Nonterminal start, std::set<Production> productions, GrammarClass tag,
                    std::set<Nonterminal> extra_nonterminals = {}, Alphabet extra_terminals = {});

  const Nonterminal& start() const noexcept { return start_; }
  const std::set<Production>& productions() const noexcept { return productions_; }
  const std::set<Nonterminal>& nonterminals() const noexcept { return nonterminals_; }
  const Alphabet& terminals() const noexcept { return terminals_; }
  GrammarClass class_tag() const noexcept { return tag_; }

  std::vector<Production> productions_of(const Nonterminal& a) const;
  bool has_epsilon_rule() const;

  /// Free-form metadata, emitted as header comments.
  std::vector<std::string> notes;

  /// True iff every production satisfies the shape constraint of `tag`.
  static bool satisfies(const std::set<Production>& productions, GrammarClass tag);

 private:
  Nonterminal start_;
  std::set<Production> productions_;
  std::set<Nonterminal> nonterminals_;
  Alphabet terminals_;
  GrammarClass tag_ = GrammarClass::Gnf;
};

/// Symbol on a context-free right-hand side: a terminal or a nonterminal.
using CfgSymbol = std::variant<Symbol, Nonterminal>;
using CfgRhs = std::vector<CfgSymbol>;

struct CfgProduction {
  Nonterminal lhs;
  CfgRhs rhs;

  auto operator<=>(const CfgProduction&) const = default;
};

/// General context-free grammar.
struct Cfg {
  Nonterminal start;
  std::set<Nonterminal> nonterminals;
  Alphabet terminals;
  std::set<CfgProduction> productions;

  /// Collects symbols from productions. Throws GrammarError on dangling
  /// references.
  void validate() const;
  static Cfg from_productions(Nonterminal start, std::set<CfgProduction> productions);
};

std::string to_string(const CfgProduction& p);

Cfg to_cfg(const HeadNormalGrammar& g);

/// Reads a Cfg as a head-normal grammar when every production already has the
/// shape; the tag is RightLinear when every tail has length at most one.
std::optional<HeadNormalGrammar> as_head_normal(const Cfg& g);

/// Shortest terminal yield of each nonterminal; absent keys never terminate.
std::map<Nonterminal, std::size_t> min_yield(const HeadNormalGrammar& g);

/// Removes non-generating, then unreachable nonterminals and their
/// productions. The start symbol is always kept.
HeadNormalGrammar trim(const HeadNormalGrammar& g);

/// { w in L(g) : |w| <= max_len }.
FiniteLanguage enumerate_grammar(const HeadNormalGrammar& g, std::size_t max_len);

/// Exact membership by length-bounded search.
bool gnf_membership(const HeadNormalGrammar& g, std::string_view w);

/// Leftmost derivation of `w`, one sentential form per step, or nullopt if
/// w is not in L(g).
std::optional<std::vector<std::string>> derivation_trace(const HeadNormalGrammar& g,
                                                         std::string_view w);

/// Terminals occurring in some word of L(g).
Alphabet used_terminals(const HeadNormalGrammar& g);

}  // namespace gsa
