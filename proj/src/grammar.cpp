#include "gsa/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <tuple>

namespace gsa {

bool is_nonterminal_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Nonterminal fresh_nonterminal(const std::string& base, std::set<Nonterminal>& used) {
  Nonterminal name = base;
  for (std::size_t i = 1; used.count(name); ++i) name = base + "_" + std::to_string(i);
  used.insert(name);
  return name;
}

std::string to_string(const Production& p) {
  std::string out = p.lhs + " ->";
  if (p.head) {
    out += ' ';
    out += *p.head;
  }
  for (const auto& n : p.tail) out += " " + n;
  if (!p.head && p.tail.empty()) out += " @eps";
  return out;
}

const char* to_string(GrammarClass c) {
  return c == GrammarClass::RightLinear ? "RIGHT_LINEAR" : "GNF";
}

HeadNormalGrammar::HeadNormalGrammar(Nonterminal start, std::set<Production> productions,
                                     GrammarClass tag, std::set<Nonterminal> extra_nonterminals,
                                     Alphabet extra_terminals)
    : start_(std::move(start)),
      productions_(std::move(productions)),
      nonterminals_(std::move(extra_nonterminals)),
      terminals_(std::move(extra_terminals)),
      tag_(tag) {
  nonterminals_.insert(start_);
  std::set<Nonterminal> in_tails;
  for (const auto& p : productions_) {
    nonterminals_.insert(p.lhs);
    if (p.head) terminals_.insert(*p.head);
    for (const auto& n : p.tail) {
      nonterminals_.insert(n);
      in_tails.insert(n);
    }
  }
  for (const auto& n : nonterminals_)
    if (!is_nonterminal_name(n))
      throw GrammarError(GrammarError::Kind::Malformed, "bad nonterminal name '" + n + "'");
  for (const auto& p : productions_) {
    if (p.head) continue;
    if (!p.tail.empty())
      throw GrammarError(GrammarError::Kind::NotHeadNormal,
                         "production without terminal head: " + to_string(p));
    if (in_tails.count(p.lhs))
      throw GrammarError(GrammarError::Kind::NotHeadNormal,
                         "ε-production on a nonterminal used in a tail: " + to_string(p));
  }
  if (!satisfies(productions_, tag_))
    throw GrammarError(tag_ == GrammarClass::RightLinear ? GrammarError::Kind::NotRightLinear
                                                         : GrammarError::Kind::NotHeadNormal,
                       std::string("productions violate the ") + to_string(tag_) + " shape");
}

bool HeadNormalGrammar::satisfies(const std::set<Production>& productions, GrammarClass tag) {
  return std::all_of(productions.begin(), productions.end(), [&](const Production& p) {
    if (!p.head) return p.tail.empty();
    return tag == GrammarClass::Gnf || p.tail.size() <= 1;
  });
}

std::vector<Production> HeadNormalGrammar::productions_of(const Nonterminal& a) const {
  std::vector<Production> out;
  auto it = productions_.lower_bound(Production{a, std::nullopt, {}});
  for (; it != productions_.end() && it->lhs == a; ++it) out.push_back(*it);
  return out;
}

bool HeadNormalGrammar::has_epsilon_rule() const {
  return std::any_of(productions_.begin(), productions_.end(),
                     [](const Production& p) { return !p.head; });
}

std::string to_string(const CfgProduction& p) {
  std::string out = p.lhs + " ->";
  if (p.rhs.empty()) return out + " @eps";
  for (const auto& s : p.rhs) {
    out += ' ';
    if (const auto* t = std::get_if<Symbol>(&s))
      out += *t;
    else
      out += std::get<Nonterminal>(s);
  }
  return out;
}

void Cfg::validate() const {
  if (!nonterminals.count(start))
    throw GrammarError(GrammarError::Kind::Malformed, "start symbol " + start + " undeclared");
  for (const auto& p : productions) {
    if (!nonterminals.count(p.lhs))
      throw GrammarError(GrammarError::Kind::Malformed, "undeclared lhs in " + to_string(p));
    for (const auto& s : p.rhs) {
      if (const auto* t = std::get_if<Symbol>(&s)) {
        if (!terminals.count(*t))
          throw GrammarError(GrammarError::Kind::Malformed, "undeclared terminal in " + to_string(p));
      } else if (!nonterminals.count(std::get<Nonterminal>(s))) {
        throw GrammarError(GrammarError::Kind::Malformed, "undeclared nonterminal in " + to_string(p));
      }
    }
  }
}

Cfg Cfg::from_productions(Nonterminal start, std::set<CfgProduction> productions) {
  Cfg g;
  g.start = std::move(start);
  g.nonterminals.insert(g.start);
  for (const auto& p : productions) {
    g.nonterminals.insert(p.lhs);
    for (const auto& s : p.rhs) {
      if (const auto* t = std::get_if<Symbol>(&s))
        g.terminals.insert(*t);
      else
        g.nonterminals.insert(std::get<Nonterminal>(s));
    }
  }
  g.productions = std::move(productions);
  return g;
}

Cfg to_cfg(const HeadNormalGrammar& g) {
  std::set<CfgProduction> prods;
  for (const auto& p : g.productions()) {
    CfgRhs rhs;
    if (p.head) rhs.emplace_back(*p.head);
    for (const auto& n : p.tail) rhs.emplace_back(n);
    prods.insert(CfgProduction{p.lhs, std::move(rhs)});
  }
  Cfg out = Cfg::from_productions(g.start(), std::move(prods));
  out.nonterminals.insert(g.nonterminals().begin(), g.nonterminals().end());
  out.terminals.insert(g.terminals().begin(), g.terminals().end());
  return out;
}

std::optional<HeadNormalGrammar> as_head_normal(const Cfg& g) {
  std::set<Production> prods;
  bool right_linear = true;
  for (const auto& p : g.productions) {
    Production hp{p.lhs, std::nullopt, {}};
    for (std::size_t i = 0; i < p.rhs.size(); ++i) {
      const auto& s = p.rhs[i];
      if (i == 0 && std::holds_alternative<Symbol>(s)) {
        hp.head = std::get<Symbol>(s);
      } else if (i > 0 && std::holds_alternative<Nonterminal>(s)) {
        hp.tail.push_back(std::get<Nonterminal>(s));
      } else {
        return std::nullopt;
      }
    }
    if (hp.tail.size() > 1) right_linear = false;
    prods.insert(std::move(hp));
  }
  try {
    return HeadNormalGrammar(g.start, std::move(prods),
                             right_linear ? GrammarClass::RightLinear : GrammarClass::Gnf,
                             g.nonterminals, g.terminals);
  } catch (const GrammarError&) {
    return std::nullopt;
  }
}

std::map<Nonterminal, std::size_t> min_yield(const HeadNormalGrammar& g) {
  std::map<Nonterminal, std::size_t> best;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      std::size_t total = p.head ? 1 : 0;
      bool ok = true;
      for (const auto& n : p.tail) {
        auto it = best.find(n);
        if (it == best.end()) {
          ok = false;
          break;
        }
        total += it->second;
      }
      if (!ok) continue;
      auto [it, inserted] = best.emplace(p.lhs, total);
      if (inserted || total < it->second) {
        it->second = total;
        changed = true;
      }
    }
  }
  return best;
}

HeadNormalGrammar trim(const HeadNormalGrammar& g) {
  const auto generating = min_yield(g);
  std::set<Production> kept;
  for (const auto& p : g.productions()) {
    if (!generating.count(p.lhs)) continue;
    if (std::all_of(p.tail.begin(), p.tail.end(), [&](const auto& n) { return generating.count(n); }))
      kept.insert(p);
  }
  std::set<Nonterminal> reachable{g.start()};
  std::vector<Nonterminal> work{g.start()};
  while (!work.empty()) {
    auto a = work.back();
    work.pop_back();
    auto it = kept.lower_bound(Production{a, std::nullopt, {}});
    for (; it != kept.end() && it->lhs == a; ++it)
      for (const auto& n : it->tail)
        if (reachable.insert(n).second) work.push_back(n);
  }
  std::set<Production> out;
  for (const auto& p : kept)
    if (reachable.count(p.lhs)) out.insert(p);
  HeadNormalGrammar result(g.start(), std::move(out), g.class_tag());
  result.notes = g.notes;
  return result;
}

Alphabet used_terminals(const HeadNormalGrammar& g) {
  Alphabet out;
  const auto trimmed = trim(g);
  for (const auto& p : trimmed.productions())
    if (p.head) out.insert(*p.head);
  return out;
}

FiniteLanguage enumerate_grammar(const HeadNormalGrammar& g, std::size_t max_len) {
  const auto yields = min_yield(g);
  constexpr auto kNever = std::numeric_limits<std::size_t>::max();
  auto yield_of = [&](const Nonterminal& n) {
    auto it = yields.find(n);
    return it == yields.end() ? kNever : it->second;
  };

  // words[X] holds every word of L(X) up to the current length bound.
  std::map<Nonterminal, WordSet> words;
  for (std::size_t bound = 0; bound <= max_len; ++bound) {
    std::map<Nonterminal, WordSet> next;
    for (const auto& p : g.productions()) {
      if (yield_of(p.lhs) == kNever) continue;
      const std::size_t head_len = p.head ? 1 : 0;
      if (head_len > bound) continue;
      const std::size_t budget = bound - head_len;

      std::vector<std::size_t> rest_min(p.tail.size() + 1, 0);
      bool feasible = true;
      for (std::size_t i = p.tail.size(); i-- > 0;) {
        const auto y = yield_of(p.tail[i]);
        if (y == kNever) {
          feasible = false;
          break;
        }
        rest_min[i] = rest_min[i + 1] + y;
      }
      if (!feasible || rest_min[0] > budget) continue;

      WordSet partial{Word(p.head ? 1 : 0, p.head.value_or('\0'))};
      for (std::size_t i = 0; i < p.tail.size() && !partial.empty(); ++i) {
        WordSet grown;
        const auto& sub = words[p.tail[i]];
        for (const auto& s : partial)
          for (const auto& t : sub) {
            if (s.size() + t.size() + rest_min[i + 1] > bound) break;  // sub is length-ordered
            grown.insert(s + t);
          }
        partial = std::move(grown);
      }
      next[p.lhs].insert(partial.begin(), partial.end());
    }
    words = std::move(next);
  }
  return FiniteLanguage(words[g.start()]);
}

namespace {

// Memoized "nonterminal X derives w[i, j)" over a fixed word.
class Recognizer {
 public:
  Recognizer(const HeadNormalGrammar& g, std::string_view w)
      : g_(g), w_(w), yields_(min_yield(g)) {}

  bool derives(const Nonterminal& x, std::size_t i, std::size_t j) {
    const auto key = std::make_tuple(x, i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    if (yields_.count(x) && yields_.at(x) <= j - i) {
      for (const auto& p : g_.productions_of(x)) {
        if (matches(p, i, j)) {
          result = true;
          break;
        }
      }
    }
    memo_[key] = result;
    return result;
  }

  bool matches(const Production& p, std::size_t i, std::size_t j) {
    if (p.head) {
      if (i >= j || w_[i] != *p.head) return false;
      return sequence(p.tail, 0, i + 1, j);
    }
    return i == j;
  }

  // tail[k..] derives w[i, j)
  bool sequence(const std::vector<Nonterminal>& tail, std::size_t k, std::size_t i, std::size_t j) {
    if (k == tail.size()) return i == j;
    std::size_t rest = 0;
    for (std::size_t r = k + 1; r < tail.size(); ++r) {
      auto it = yields_.find(tail[r]);
      if (it == yields_.end()) return false;
      rest += it->second;
    }
    if (rest > j - i) return false;
    for (std::size_t m = i; m + rest <= j; ++m)
      if (derives(tail[k], i, m) && sequence(tail, k + 1, m, j)) return true;
    return false;
  }

  struct Node {
    Production production;
    std::vector<Node> children;
  };

  Node build(const Nonterminal& x, std::size_t i, std::size_t j) {
    for (const auto& p : g_.productions_of(x)) {
      if (!matches(p, i, j)) continue;
      Node node{p, {}};
      split(p.tail, 0, p.head ? i + 1 : i, j, node.children);
      return node;
    }
    throw std::logic_error("derivation reconstruction failed");
  }

 private:
  void split(const std::vector<Nonterminal>& tail, std::size_t k, std::size_t i, std::size_t j,
             std::vector<Node>& out) {
    if (k == tail.size()) return;
    for (std::size_t m = i; m <= j; ++m) {
      if (derives(tail[k], i, m) && sequence(tail, k + 1, m, j)) {
        out.push_back(build(tail[k], i, m));
        split(tail, k + 1, m, j, out);
        return;
      }
    }
    throw std::logic_error("derivation reconstruction failed");
  }

  const HeadNormalGrammar& g_;
  std::string_view w_;
  std::map<Nonterminal, std::size_t> yields_;
  std::map<std::tuple<Nonterminal, std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

bool gnf_membership(const HeadNormalGrammar& g, std::string_view w) {
  Recognizer r(g, w);
  return r.derives(g.start(), 0, w.size());
}

std::optional<std::vector<std::string>> derivation_trace(const HeadNormalGrammar& g,
                                                         std::string_view w) {
  Recognizer r(g, w);
  if (!r.derives(g.start(), 0, w.size())) return std::nullopt;
  using Node = Recognizer::Node;
  const Node root = r.build(g.start(), 0, w.size());

  auto render = [](const std::string& prefix, const std::vector<const Node*>& pending,
                   const Nonterminal* lead) {
    std::string out = prefix;
    auto add = [&](const std::string& s) {
      if (!out.empty()) out += ' ';
      out += s;
    };
    if (lead) add(*lead);
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) add((*it)->production.lhs);
    return out.empty() ? std::string("@eps") : out;
  };

  std::vector<std::string> steps;
  std::string prefix;
  // Stack top is the leftmost pending nonterminal.
  std::vector<const Node*> stack{&root};
  steps.push_back(g.start());
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->production.head) {
      if (!prefix.empty()) prefix += ' ';
      prefix += *n->production.head;
    }
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(&*it);
    steps.push_back(render(prefix, stack, nullptr));
  }
  return steps;
}

}  // namespace gsa
