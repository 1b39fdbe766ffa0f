#include "gsa/grammar_assembly.hpp"

#include <algorithm>

#include "gsa/normalize.hpp"

namespace gsa {

const char* to_string(AssemblyMode m) {
  return m == AssemblyMode::Paper ? "paper" : "single";
}

AssemblyMode parse_mode(std::string_view text) {
  if (text == "paper") return AssemblyMode::Paper;
  if (text == "single" || text == "single-crossover") return AssemblyMode::SingleCrossover;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected paper|single)");
}

HeadNormalGrammar rename_apart(const HeadNormalGrammar& g, std::set<Nonterminal>& taken) {
  std::set<Nonterminal> used = taken;
  used.insert(g.nonterminals().begin(), g.nonterminals().end());
  std::map<Nonterminal, Nonterminal> names;
  for (const auto& n : g.nonterminals())
    names[n] = taken.count(n) ? fresh_nonterminal(n, used) : n;
  auto rename = [&](const Nonterminal& n) { return names.at(n); };

  std::set<Production> prods;
  for (const auto& p : g.productions()) {
    Production q{rename(p.lhs), p.head, {}};
    for (const auto& n : p.tail) q.tail.push_back(rename(n));
    prods.insert(std::move(q));
  }
  std::set<Nonterminal> all;
  for (const auto& [_, to] : names) all.insert(to);
  taken.insert(all.begin(), all.end());
  HeadNormalGrammar out(rename(g.start()), std::move(prods), g.class_tag(), std::move(all), g.terminals());
  out.notes = g.notes;
  return out;
}

namespace {

bool both_right_linear(const HeadNormalGrammar& a, const HeadNormalGrammar& b) {
  return HeadNormalGrammar::satisfies(a.productions(), GrammarClass::RightLinear) &&
         HeadNormalGrammar::satisfies(b.productions(), GrammarClass::RightLinear);
}

void alias_start(std::set<Production>& prods, const Nonterminal& start,
                 const std::vector<Nonterminal>& aliased) {
  std::vector<Production> copies;
  for (const auto& p : prods)
    if (std::find(aliased.begin(), aliased.end(), p.lhs) != aliased.end())
      copies.push_back(Production{start, p.head, p.tail});
  prods.insert(copies.begin(), copies.end());
}

const char* kAliasNote =
    "start aliasing: S -> S1 | S2 realized by copying every production of S1 and S2 onto the fresh start";

HeadNormalGrammar assemble_paper(const HeadNormalGrammar& a, const HeadNormalGrammar& b,
                                 std::set<Nonterminal>& used) {
  const Nonterminal start = fresh_nonterminal("S", used);
  std::set<Production> prods = a.productions();
  prods.insert(b.productions().begin(), b.productions().end());
  for (const auto& p1 : a.productions()) {
    if (!p1.head) continue;
    for (const auto& p2 : b.productions()) {
      if (p2.head != p1.head) continue;
      prods.insert(Production{p1.lhs, p1.head, p2.tail});
      prods.insert(Production{p2.lhs, p2.head, p1.tail});
    }
  }
  alias_start(prods, start, {a.start(), b.start()});
  const auto tag = both_right_linear(a, b) ? GrammarClass::RightLinear : GrammarClass::Gnf;
  HeadNormalGrammar out(start, std::move(prods), tag);
  out.notes = {"mode: paper", kAliasNote};
  return out;
}

// Nonterminal X -> X_has deriving the words of L(X) that contain a symbol
// of `symbols`.
void add_containment_filter(const HeadNormalGrammar& g, const Alphabet& symbols,
                            const std::map<Nonterminal, Nonterminal>& has,
                            std::set<Production>& out) {
  for (const auto& p : g.productions()) {
    if (!p.head) continue;
    const auto& lhs = has.at(p.lhs);
    if (symbols.count(*p.head)) {
      out.insert(Production{lhs, p.head, p.tail});
      continue;
    }
    for (std::size_t i = 0; i < p.tail.size(); ++i) {
      auto tail = p.tail;
      tail[i] = has.at(tail[i]);
      out.insert(Production{lhs, p.head, std::move(tail)});
    }
  }
}

// Suffix side of a crossover on `a` for general head-normal `g`: the words v
// with u a v in L(g). Returns the GNF grammar for the nonempty part and
// whether ε belongs to the language.
struct SuffixSide {
  std::optional<HeadNormalGrammar> nonempty;
  bool has_empty = false;
};

SuffixSide suffix_after(const HeadNormalGrammar& g, Symbol a) {
  std::set<Nonterminal> used = g.nonterminals();
  std::map<Nonterminal, Nonterminal> suf;
  for (const auto& n : g.nonterminals()) suf[n] = fresh_nonterminal(n + "_suf", used);

  const Cfg base = to_cfg(g);
  std::set<CfgProduction> prods = base.productions;
  for (const auto& p : g.productions()) {
    if (!p.head) continue;
    if (*p.head == a) {
      CfgRhs rhs(p.tail.begin(), p.tail.end());
      prods.insert(CfgProduction{suf.at(p.lhs), std::move(rhs)});
    }
    for (std::size_t i = 0; i < p.tail.size(); ++i) {
      CfgRhs rhs{suf.at(p.tail[i])};
      rhs.insert(rhs.end(), p.tail.begin() + i + 1, p.tail.end());
      prods.insert(CfgProduction{suf.at(p.lhs), std::move(rhs)});
    }
  }
  const Cfg full = Cfg::from_productions(suf.at(g.start()), std::move(prods));

  SuffixSide out;
  const Cfg eps_free = remove_epsilon_productions(full);
  {
    // ε is in the language iff the start is nullable.
    std::set<Nonterminal> nullable;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : full.productions) {
        if (nullable.count(p.lhs)) continue;
        bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const CfgSymbol& s) {
          return std::holds_alternative<Nonterminal>(s) && nullable.count(std::get<Nonterminal>(s));
        });
        if (all) {
          nullable.insert(p.lhs);
          changed = true;
        }
      }
    }
    out.has_empty = nullable.count(full.start) > 0;
  }
  try {
    out.nonempty = cfg_to_gnf(eps_free);
  } catch (const GrammarError& e) {
    if (e.kind() != GrammarError::Kind::EmptyLanguage) throw;
  }
  return out;
}

// One direction of the single-switch construction: prefixes of `pre` ending
// in a shared symbol, continued by a suffix of `post` after that symbol.
// Returns the start of the prefix phase.
Nonterminal add_crossover_phase(const HeadNormalGrammar& pre, const HeadNormalGrammar& post,
                                const Alphabet& shared, bool right_linear,
                                std::set<Nonterminal>& used, std::set<Production>& out) {
  std::map<Nonterminal, Nonterminal> phase;
  for (const auto& n : pre.nonterminals()) phase[n] = fresh_nonterminal(n + "_pre", used);

  // Switch continuations per shared symbol: heads of the post-phase tails.
  std::map<Symbol, std::vector<std::vector<Nonterminal>>> continuations;
  if (right_linear) {
    for (const auto& p : post.productions())
      if (p.head && shared.count(*p.head)) continuations[*p.head].push_back(p.tail);
  } else {
    for (Symbol a : shared) {
      auto side = suffix_after(post, a);
      if (side.has_empty) continuations[a].push_back({});
      if (side.nonempty) {
        auto renamed = rename_apart(*side.nonempty, used);
        out.insert(renamed.productions().begin(), renamed.productions().end());
        continuations[a].push_back({renamed.start()});
      }
    }
  }

  for (const auto& p : pre.productions()) {
    if (!p.head) continue;
    const auto& lhs = phase.at(p.lhs);
    for (std::size_t i = 0; i < p.tail.size(); ++i) {
      std::vector<Nonterminal> tail(p.tail.begin(), p.tail.begin() + i);
      tail.push_back(phase.at(p.tail[i]));
      out.insert(Production{lhs, p.head, std::move(tail)});
    }
    if (auto it = continuations.find(*p.head); it != continuations.end())
      for (const auto& tail : it->second) out.insert(Production{lhs, p.head, tail});
  }
  return phase.at(pre.start());
}

HeadNormalGrammar assemble_single(const HeadNormalGrammar& raw_a, const HeadNormalGrammar& raw_b,
                                  ParentInclusion parents, std::set<Nonterminal>& used) {
  const auto a = trim(raw_a);
  const auto b = trim(raw_b);
  const bool rl = both_right_linear(a, b);
  const Alphabet sym_a = used_terminals(a);
  const Alphabet sym_b = used_terminals(b);
  Alphabet shared;
  std::set_intersection(sym_a.begin(), sym_a.end(), sym_b.begin(), sym_b.end(),
                        std::inserter(shared, shared.end()));

  const Nonterminal start = fresh_nonterminal("S", used);
  // Post phases are the original grammars, which carry no cross productions.
  std::set<Production> prods = a.productions();
  prods.insert(b.productions().begin(), b.productions().end());

  std::vector<Nonterminal> aliased;
  aliased.push_back(add_crossover_phase(a, b, shared, rl, used, prods));
  aliased.push_back(add_crossover_phase(b, a, shared, rl, used, prods));

  if (parents == ParentInclusion::Always) {
    aliased.push_back(a.start());
    aliased.push_back(b.start());
  } else {
    for (const auto* pair : {&a, &b}) {
      const auto& g = *pair;
      const Alphabet& other = (pair == &a) ? sym_b : sym_a;
      std::map<Nonterminal, Nonterminal> has;
      for (const auto& n : g.nonterminals()) has[n] = fresh_nonterminal(n + "_has", used);
      add_containment_filter(g, other, has, prods);
      aliased.push_back(has.at(g.start()));
    }
  }
  alias_start(prods, start, aliased);

  const auto tag = rl ? GrammarClass::RightLinear : GrammarClass::Gnf;
  HeadNormalGrammar out = trim(HeadNormalGrammar(start, std::move(prods), tag));
  out.notes = {"mode: single", kAliasNote,
               std::string("parents: ") +
                   (parents == ParentInclusion::Always ? "always" : "shared-symbol")};
  return out;
}

}  // namespace

HeadNormalGrammar assemble_grammars(const HeadNormalGrammar& g1, const HeadNormalGrammar& g2,
                                    AssemblyMode mode, ParentInclusion parents) {
  std::set<Nonterminal> used;
  auto a = rename_apart(g1, used);
  auto b = rename_apart(g2, used);
  if (mode == AssemblyMode::Paper) return assemble_paper(a, b, used);
  return assemble_single(a, b, parents, used);
}

}  // namespace gsa
