#include "gsa/normalize.hpp"

#include <algorithm>
#include <cstdio>

namespace gsa {

namespace {

using RuleMap = std::map<Nonterminal, std::set<CfgRhs>>;

bool is_terminal(const CfgSymbol& s) { return std::holds_alternative<Symbol>(s); }
const Nonterminal& nonterminal(const CfgSymbol& s) { return std::get<Nonterminal>(s); }

RuleMap to_rule_map(const Cfg& g) {
  RuleMap out;
  for (const auto& p : g.productions) out[p.lhs].insert(p.rhs);
  return out;
}

std::set<CfgProduction> to_productions(const RuleMap& rules) {
  std::set<CfgProduction> out;
  for (const auto& [lhs, rhss] : rules)
    for (const auto& rhs : rhss) out.insert(CfgProduction{lhs, rhs});
  return out;
}

std::set<Nonterminal> generating_set(const Cfg& g) {
  std::set<Nonterminal> gen;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      if (gen.count(p.lhs)) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(),
                      [&](const CfgSymbol& s) { return is_terminal(s) || gen.count(nonterminal(s)); })) {
        gen.insert(p.lhs);
        changed = true;
      }
    }
  }
  return gen;
}

std::set<Nonterminal> nullable_set(const Cfg& g) {
  std::set<Nonterminal> nullable;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      if (nullable.count(p.lhs)) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(),
                      [&](const CfgSymbol& s) { return !is_terminal(s) && nullable.count(nonterminal(s)); })) {
        nullable.insert(p.lhs);
        changed = true;
      }
    }
  }
  return nullable;
}

std::string terminal_name(Symbol a) {
  if (std::isalnum(static_cast<unsigned char>(a))) return std::string("T_") + a;
  char buf[8];
  std::snprintf(buf, sizeof buf, "T_x%02X", static_cast<unsigned char>(a));
  return buf;
}

// Replaces a leading `lead` in every rhs of `target` by each rhs of `lead`.
bool substitute_leading(std::set<CfgRhs>& target, const Nonterminal& lead, const std::set<CfgRhs>& with) {
  std::set<CfgRhs> out;
  bool changed = false;
  for (const auto& rhs : target) {
    if (!rhs.empty() && !is_terminal(rhs[0]) && nonterminal(rhs[0]) == lead) {
      changed = true;
      for (const auto& d : with) {
        CfgRhs merged = d;
        merged.insert(merged.end(), rhs.begin() + 1, rhs.end());
        out.insert(std::move(merged));
      }
    } else {
      out.insert(rhs);
    }
  }
  target = std::move(out);
  return changed;
}

bool terminal_led(const std::set<CfgRhs>& rhss) {
  return std::all_of(rhss.begin(), rhss.end(),
                     [](const CfgRhs& r) { return !r.empty() && is_terminal(r[0]); });
}

}  // namespace

Cfg trim(const Cfg& g) {
  const auto gen = generating_set(g);
  std::set<CfgProduction> kept;
  for (const auto& p : g.productions) {
    if (!gen.count(p.lhs)) continue;
    if (std::all_of(p.rhs.begin(), p.rhs.end(),
                    [&](const CfgSymbol& s) { return is_terminal(s) || gen.count(nonterminal(s)); }))
      kept.insert(p);
  }
  std::set<Nonterminal> reach{g.start};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : kept) {
      if (!reach.count(p.lhs)) continue;
      for (const auto& s : p.rhs)
        if (!is_terminal(s) && reach.insert(nonterminal(s)).second) changed = true;
    }
  }
  std::set<CfgProduction> out;
  for (const auto& p : kept)
    if (reach.count(p.lhs)) out.insert(p);
  return Cfg::from_productions(g.start, std::move(out));
}

bool is_right_linear(const Cfg& g) {
  return std::all_of(g.productions.begin(), g.productions.end(), [](const CfgProduction& p) {
    for (std::size_t i = 0; i + 1 < p.rhs.size(); ++i)
      if (!is_terminal(p.rhs[i])) return false;
    return true;
  });
}

HeadNormalGrammar normalize_right_linear(const Cfg& g, NormalizeOptions options) {
  if (!is_right_linear(g))
    throw GrammarError(GrammarError::Kind::NotRightLinear, "grammar is not right-linear");

  std::set<Nonterminal> used = g.nonterminals;
  // After splitting: rhs is `a`, `a Y`, `Y`, or ε.
  std::set<CfgProduction> split;
  for (const auto& p : g.productions) {
    std::vector<Symbol> word;
    std::optional<Nonterminal> target;
    for (const auto& s : p.rhs) {
      if (is_terminal(s))
        word.push_back(std::get<Symbol>(s));
      else
        target = nonterminal(s);
    }
    if (word.size() <= 1) {
      split.insert(p);
      continue;
    }
    Nonterminal from = p.lhs;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      Nonterminal next = fresh_nonterminal(p.lhs, used);
      split.insert(CfgProduction{from, {word[i], next}});
      from = next;
    }
    CfgRhs last{word.back()};
    if (target) last.emplace_back(*target);
    split.insert(CfgProduction{from, std::move(last)});
  }

  const Cfg work = Cfg::from_productions(g.start, split);
  const auto nullable = nullable_set(work);

  std::map<Nonterminal, std::set<Nonterminal>> units;
  for (const auto& p : split)
    if (p.rhs.size() == 1 && !is_terminal(p.rhs[0])) units[p.lhs].insert(nonterminal(p.rhs[0]));

  std::set<Production> out;
  for (const auto& x : work.nonterminals) {
    std::set<Nonterminal> closure{x};
    std::vector<Nonterminal> stack{x};
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      for (const auto& z : units[y])
        if (closure.insert(z).second) stack.push_back(z);
    }
    for (const auto& p : split) {
      if (!closure.count(p.lhs) || p.rhs.empty() || !is_terminal(p.rhs[0])) continue;
      const Symbol a = std::get<Symbol>(p.rhs[0]);
      if (p.rhs.size() == 1) {
        out.insert(Production{x, a, {}});
      } else {
        const auto& z = nonterminal(p.rhs[1]);
        out.insert(Production{x, a, {z}});
        if (nullable.count(z)) out.insert(Production{x, a, {}});
      }
    }
  }

  Nonterminal start = g.start;
  if (nullable.count(g.start)) {
    if (!options.allow_start_epsilon)
      throw GrammarError(GrammarError::Kind::EpsilonInLanguage,
                         "the language contains ε but ε was not allowed");
    const bool in_tail = std::any_of(out.begin(), out.end(), [&](const Production& p) {
      return std::find(p.tail.begin(), p.tail.end(), g.start) != p.tail.end();
    });
    if (in_tail) {
      start = fresh_nonterminal(g.start, used);
      std::vector<Production> copies;
      for (const auto& p : out)
        if (p.lhs == g.start) copies.push_back(Production{start, p.head, p.tail});
      out.insert(copies.begin(), copies.end());
    }
    out.insert(Production{start, std::nullopt, {}});
  }
  return HeadNormalGrammar(start, std::move(out), GrammarClass::RightLinear, {}, g.terminals);
}

Cfg remove_epsilon_productions(const Cfg& g) {
  const auto nullable = nullable_set(g);
  std::set<CfgProduction> out;
  for (const auto& p : g.productions) {
    std::vector<std::size_t> optional_at;
    for (std::size_t i = 0; i < p.rhs.size(); ++i)
      if (!is_terminal(p.rhs[i]) && nullable.count(nonterminal(p.rhs[i]))) optional_at.push_back(i);
    const std::size_t variants = std::size_t{1} << optional_at.size();
    for (std::size_t mask = 0; mask < variants; ++mask) {
      CfgRhs rhs;
      std::size_t k = 0;
      for (std::size_t i = 0; i < p.rhs.size(); ++i) {
        if (k < optional_at.size() && optional_at[k] == i) {
          const bool drop = (mask >> k) & 1;
          ++k;
          if (drop) continue;
        }
        rhs.push_back(p.rhs[i]);
      }
      if (!rhs.empty()) out.insert(CfgProduction{p.lhs, std::move(rhs)});
    }
  }
  Cfg result = Cfg::from_productions(g.start, std::move(out));
  result.terminals.insert(g.terminals.begin(), g.terminals.end());
  return result;
}

HeadNormalGrammar cfg_to_gnf(const Cfg& input) {
  for (const auto& p : input.productions)
    if (p.rhs.empty())
      throw GrammarError(GrammarError::Kind::EpsilonProduction,
                         "GNF conversion needs an ε-free grammar: " + to_string(p));
  if (!generating_set(input).count(input.start))
    throw GrammarError(GrammarError::Kind::EmptyLanguage, "the grammar generates no word");

  std::set<Nonterminal> used = input.nonterminals;
  const Cfg trimmed = trim(input);

  // Unit-rule elimination.
  RuleMap rules;
  {
    const RuleMap base = to_rule_map(trimmed);
    for (const auto& a : trimmed.nonterminals) {
      std::set<Nonterminal> closure{a};
      std::vector<Nonterminal> stack{a};
      while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        auto it = base.find(b);
        if (it == base.end()) continue;
        for (const auto& rhs : it->second)
          if (rhs.size() == 1 && !is_terminal(rhs[0]) && closure.insert(nonterminal(rhs[0])).second)
            stack.push_back(nonterminal(rhs[0]));
      }
      for (const auto& b : closure) {
        auto it = base.find(b);
        if (it == base.end()) continue;
        for (const auto& rhs : it->second)
          if (!(rhs.size() == 1 && !is_terminal(rhs[0]))) rules[a].insert(rhs);
      }
    }
  }
  rules = to_rule_map(trim(Cfg::from_productions(trimmed.start, to_productions(rules))));

  // Terminals past the first position move behind T_a -> a.
  std::map<Symbol, Nonterminal> terminal_nts;
  {
    RuleMap replaced;
    for (const auto& [lhs, rhss] : rules)
      for (auto rhs : rhss) {
        for (std::size_t i = 1; i < rhs.size(); ++i) {
          if (!is_terminal(rhs[i])) continue;
          const Symbol a = std::get<Symbol>(rhs[i]);
          auto it = terminal_nts.find(a);
          if (it == terminal_nts.end())
            it = terminal_nts.emplace(a, fresh_nonterminal(terminal_name(a), used)).first;
          rhs[i] = it->second;
        }
        replaced[lhs].insert(std::move(rhs));
      }
    for (const auto& [a, n] : terminal_nts) replaced[n].insert(CfgRhs{a});
    rules = std::move(replaced);
  }

  // Order: start first, then the rest by name.
  std::vector<Nonterminal> order{input.start};
  for (const auto& [lhs, _] : rules)
    if (lhs != input.start) order.push_back(lhs);
  std::map<Nonterminal, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;

  auto leading_index = [&](const CfgRhs& rhs) -> std::optional<std::size_t> {
    if (rhs.empty() || is_terminal(rhs[0])) return std::nullopt;
    auto it = index.find(nonterminal(rhs[0]));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& ai = order[i];
    // Forward substitution: afterwards every Ai rule leads with a terminal
    // or with Aj for j >= i.
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& rhs : rules[ai]) {
        auto j = leading_index(rhs);
        if (j && *j < i) {
          substitute_leading(rules[ai], order[*j], rules[order[*j]]);
          changed = true;
          break;
        }
      }
    }
    // Immediate left recursion: Ai -> Ai alpha | beta.
    std::set<CfgRhs> alphas, betas;
    for (const auto& rhs : rules[ai]) {
      if (auto j = leading_index(rhs); j && *j == i)
        alphas.insert(CfgRhs(rhs.begin() + 1, rhs.end()));
      else
        betas.insert(rhs);
    }
    if (alphas.empty()) continue;
    if (betas.empty()) {
      rules.erase(ai);
      continue;
    }
    const Nonterminal rest = fresh_nonterminal(ai + "_R", used);
    std::set<CfgRhs> new_ai = betas;
    for (auto beta : betas) {
      beta.emplace_back(rest);
      new_ai.insert(std::move(beta));
    }
    std::set<CfgRhs> new_rest = alphas;
    for (auto alpha : alphas) {
      alpha.emplace_back(rest);
      new_rest.insert(std::move(alpha));
    }
    rules[ai] = std::move(new_ai);
    rules[rest] = std::move(new_rest);
  }

  // Back substitution until every rule is terminal-led.
  for (;;) {
    bool pending = false, progress = false;
    for (auto& [lhs, rhss] : rules) {
      if (terminal_led(rhss)) continue;
      pending = true;
      std::set<Nonterminal> leads;
      for (const auto& rhs : rhss)
        if (!rhs.empty() && !is_terminal(rhs[0])) leads.insert(nonterminal(rhs[0]));
      for (const auto& lead : leads) {
        auto it = rules.find(lead);
        if (it == rules.end()) {
          // Lead symbol lost every rule: drop the dependent rules.
          std::erase_if(rhss, [&](const CfgRhs& r) {
            return !r.empty() && !is_terminal(r[0]) && nonterminal(r[0]) == lead;
          });
          progress = true;
        } else if (lead != lhs && terminal_led(it->second)) {
          progress |= substitute_leading(rhss, lead, it->second);
        }
      }
    }
    if (!pending) break;
    if (!progress) throw std::logic_error("GNF back substitution stalled");
  }

  std::set<Production> prods;
  for (const auto& [lhs, rhss] : rules)
    for (const auto& rhs : rhss) {
      Production p{lhs, std::get<Symbol>(rhs[0]), {}};
      for (std::size_t i = 1; i < rhs.size(); ++i) p.tail.push_back(nonterminal(rhs[i]));
      prods.insert(std::move(p));
    }
  auto result = trim(HeadNormalGrammar(input.start, std::move(prods), GrammarClass::Gnf));
  if (result.productions_of(result.start()).empty())
    throw GrammarError(GrammarError::Kind::EmptyLanguage, "the grammar generates no word");
  return result;
}

}  // namespace gsa

namespace gsa {

HeadNormalGrammar to_head_normal(const Cfg& g, NormalizeOptions options) {
  if (auto h = as_head_normal(g)) return *h;
  if (is_right_linear(g)) return normalize_right_linear(g, options);
  return cfg_to_gnf(g);
}

}  // namespace gsa
