#include "gsa/nfa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

namespace gsa {

StateId Nfa::add_state(std::string name) {
  const StateId id = names_.size();
  if (name.empty()) name = "q" + std::to_string(id);
  std::string unique = name;
  for (std::size_t i = 1; name_set_.count(unique); ++i) unique = name + "_" + std::to_string(i);
  name_set_.insert(unique);
  names_.push_back(std::move(unique));
  out_.emplace_back();
  return id;
}

void Nfa::check(StateId s) const {
  if (s >= names_.size()) throw std::out_of_range("no state " + std::to_string(s));
}

void Nfa::add_transition(StateId from, std::optional<Symbol> label, StateId to) {
  check(from);
  check(to);
  Transition t{from, label, to};
  if (!transitions_.insert(t).second) return;
  if (label) alphabet_.insert(*label);
  auto& edges = out_[from];
  edges.insert(std::upper_bound(edges.begin(), edges.end(), t), t);
}

void Nfa::set_start(StateId s) {
  check(s);
  start_ = s;
}

void Nfa::add_final(StateId s) {
  check(s);
  finals_.insert(s);
}

std::optional<StateId> Nfa::find_state(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

std::vector<Transition> Nfa::out(StateId s) const { return out_.at(s); }

StateSet epsilon_closure(const Nfa& m, StateSet states) {
  std::vector<StateId> work(states.begin(), states.end());
  while (!work.empty()) {
    const auto s = work.back();
    work.pop_back();
    for (const auto& t : m.out(s))
      if (!t.label && states.insert(t.to).second) work.push_back(t.to);
  }
  return states;
}

StateSet step(const Nfa& m, const StateSet& states, Symbol a) {
  StateSet next;
  for (auto s : states)
    for (const auto& t : m.out(s))
      if (t.label == a) next.insert(t.to);
  return epsilon_closure(m, std::move(next));
}

bool accepts(const Nfa& m, std::string_view w) {
  if (m.size() == 0) return false;
  auto cur = epsilon_closure(m, {m.start()});
  for (Symbol a : w) {
    cur = step(m, cur, a);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](StateId s) { return m.is_final(s); });
}

namespace {

// Fewest symbols from each state to a final (ε-moves are free).
std::vector<std::size_t> distance_to_final(const Nfa& m) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(m.size(), kInf);
  std::vector<std::vector<Transition>> in(m.size());
  for (const auto& t : m.transitions()) in[t.to].push_back(t);
  std::deque<StateId> queue;
  for (auto f : m.finals()) {
    dist[f] = 0;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (const auto& t : in[s]) {
      const std::size_t w = t.label ? 1 : 0;
      if (dist[s] + w < dist[t.from]) {
        dist[t.from] = dist[s] + w;
        if (w == 0)
          queue.push_front(t.from);
        else
          queue.push_back(t.from);
      }
    }
  }
  return dist;
}

}  // namespace

FiniteLanguage enumerate_nfa(const Nfa& m, std::size_t max_len) {
  FiniteLanguage out;
  if (m.size() == 0) return out;
  const auto dist = distance_to_final(m);
  const std::vector<Symbol> symbols(m.alphabet().begin(), m.alphabet().end());
  auto min_dist = [&](const StateSet& set) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto s : set) best = std::min(best, dist[s]);
    return best;
  };

  std::function<void(Word&, const StateSet&)> walk = [&](Word& prefix, const StateSet& set) {
    const auto d = min_dist(set);
    if (d == std::numeric_limits<std::size_t>::max() || prefix.size() + d > max_len) return;
    if (d == 0) out.insert(prefix);
    if (prefix.size() == max_len) return;
    for (Symbol a : symbols) {
      auto next = step(m, set, a);
      if (next.empty()) continue;
      prefix.push_back(a);
      walk(prefix, next);
      prefix.pop_back();
    }
  };
  Word prefix;
  walk(prefix, epsilon_closure(m, {m.start()}));
  return out;
}

StateSet accessible_states(const Nfa& m) {
  StateSet seen;
  if (m.size() == 0) return seen;
  std::vector<StateId> work{m.start()};
  seen.insert(m.start());
  while (!work.empty()) {
    const auto s = work.back();
    work.pop_back();
    for (const auto& t : m.out(s))
      if (seen.insert(t.to).second) work.push_back(t.to);
  }
  return seen;
}

StateSet coaccessible_states(const Nfa& m) {
  std::vector<std::vector<StateId>> in(m.size());
  for (const auto& t : m.transitions()) in[t.to].push_back(t.from);
  StateSet seen(m.finals().begin(), m.finals().end());
  std::vector<StateId> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const auto s = work.back();
    work.pop_back();
    for (auto p : in[s])
      if (seen.insert(p).second) work.push_back(p);
  }
  return seen;
}

Alphabet useful_symbols(const Nfa& m) {
  const auto acc = accessible_states(m);
  const auto coacc = coaccessible_states(m);
  Alphabet out;
  for (const auto& t : m.transitions())
    if (t.label && acc.count(t.from) && coacc.count(t.to)) out.insert(*t.label);
  return out;
}

namespace {

// Copies every state and transition of `src` into `dst`; returns the index
// offset. Names get `suffix` appended.
StateId embed(Nfa& dst, const Nfa& src, const std::string& suffix = {}) {
  const StateId offset = dst.size();
  for (StateId s = 0; s < src.size(); ++s) dst.add_state(src.name(s) + suffix);
  for (const auto& t : src.transitions()) dst.add_transition(t.from + offset, t.label, t.to + offset);
  for (Symbol a : src.alphabet()) dst.add_symbol(a);
  return offset;
}

// Product of `m` with a two-valued flag. `next_flag` maps (flag, label) to
// the successor flag; finals are (f, true).
Nfa flag_product(const Nfa& m, bool initial,
                 const std::function<bool(bool, std::optional<Symbol>)>& next_flag) {
  Nfa out;
  for (StateId s = 0; s < m.size(); ++s) {
    out.add_state(m.name(s) + "_0");
    out.add_state(m.name(s) + "_1");
  }
  auto id = [](StateId s, bool f) { return 2 * s + (f ? 1 : 0); };
  for (const auto& t : m.transitions())
    for (bool f : {false, true}) out.add_transition(id(t.from, f), t.label, id(t.to, next_flag(f, t.label)));
  for (Symbol a : m.alphabet()) out.add_symbol(a);
  if (m.size() > 0) out.set_start(id(m.start(), initial));
  for (auto f : m.finals()) out.add_final(id(f, true));
  return out;
}

Nfa empty_nfa() {
  Nfa m;
  m.set_start(m.add_state("q0"));
  return m;
}

}  // namespace

Nfa prefix_closure(const Nfa& m) {
  Nfa out;
  embed(out, m);
  if (m.size() == 0) return empty_nfa();
  out.set_start(m.start());
  const auto acc = accessible_states(m);
  for (auto s : coaccessible_states(m))
    if (acc.count(s)) out.add_final(s);
  return out;
}

Nfa suffix_closure(const Nfa& m) {
  if (m.size() == 0) return empty_nfa();
  Nfa out;
  const StateId start = out.add_state("suffix_start");
  const StateId offset = embed(out, m);
  out.set_start(start);
  for (auto s : accessible_states(m)) out.add_transition(start, std::nullopt, s + offset);
  for (auto f : m.finals()) out.add_final(f + offset);
  return out;
}

Nfa union_nfa(const std::vector<Nfa>& parts) {
  Nfa out;
  const StateId start = out.add_state("union_start");
  out.set_start(start);
  for (const auto& p : parts) {
    if (p.size() == 0) continue;
    const StateId offset = embed(out, p);
    out.add_transition(start, std::nullopt, p.start() + offset);
    for (auto f : p.finals()) out.add_final(f + offset);
  }
  return out;
}

Nfa concat_nfa(const Nfa& a, const Nfa& b) {
  if (a.size() == 0 || b.size() == 0) return empty_nfa();
  Nfa out;
  const StateId oa = embed(out, a);
  const StateId ob = embed(out, b);
  out.set_start(a.start() + oa);
  for (auto f : a.finals()) out.add_transition(f + oa, std::nullopt, b.start() + ob);
  for (auto f : b.finals()) out.add_final(f + ob);
  return out;
}

Nfa ending_with(const Nfa& m, Symbol a) {
  return flag_product(m, false, [a](bool f, std::optional<Symbol> label) {
    return label ? *label == a : f;
  });
}

Nfa left_quotient(const Nfa& m, Symbol a) {
  if (m.size() == 0) return empty_nfa();
  Nfa out;
  const StateId start = out.add_state("quotient_start");
  const StateId offset = embed(out, m);
  out.set_start(start);
  for (auto s : step(m, epsilon_closure(m, {m.start()}), a))
    out.add_transition(start, std::nullopt, s + offset);
  for (auto f : m.finals()) out.add_final(f + offset);
  return out;
}

Nfa containing_any(const Nfa& m, const Alphabet& symbols) {
  return flag_product(m, false, [&symbols](bool f, std::optional<Symbol> label) {
    return f || (label && symbols.count(*label));
  });
}

Nfa crossover_nfa(const Nfa& m1, const Nfa& m2, ParentInclusion parents) {
  std::vector<Nfa> parts;
  Alphabet shared;
  std::set_intersection(m1.alphabet().begin(), m1.alphabet().end(), m2.alphabet().begin(),
                        m2.alphabet().end(), std::inserter(shared, shared.end()));
  const Nfa pre1 = prefix_closure(m1), pre2 = prefix_closure(m2);
  const Nfa suf1 = suffix_closure(m1), suf2 = suffix_closure(m2);
  for (Symbol a : shared) {
    parts.push_back(concat_nfa(ending_with(pre1, a), left_quotient(suf2, a)));
    parts.push_back(concat_nfa(ending_with(pre2, a), left_quotient(suf1, a)));
  }
  if (parents == ParentInclusion::Always) {
    parts.push_back(m1);
    parts.push_back(m2);
  } else {
    parts.push_back(containing_any(m1, useful_symbols(m2)));
    parts.push_back(containing_any(m2, useful_symbols(m1)));
  }
  Nfa out = union_nfa(parts);
  out.notes.push_back("crossover language from prefix/suffix closures");
  return out;
}

Nfa rename_apart(const Nfa& m, std::set<std::string>& taken) {
  std::set<std::string> used = taken;
  for (StateId s = 0; s < m.size(); ++s) used.insert(m.name(s));
  Nfa out;
  for (StateId s = 0; s < m.size(); ++s) {
    std::string name = m.name(s);
    if (taken.count(name)) {
      std::string base = name;
      for (std::size_t i = 1; used.count(name); ++i) name = base + "_" + std::to_string(i);
      used.insert(name);
    }
    out.add_state(name);
  }
  for (const auto& t : m.transitions()) out.add_transition(t.from, t.label, t.to);
  for (Symbol a : m.alphabet()) out.add_symbol(a);
  if (m.size() > 0) out.set_start(m.start());
  for (auto f : m.finals()) out.add_final(f);
  for (StateId s = 0; s < out.size(); ++s) taken.insert(out.name(s));
  out.notes = m.notes;
  return out;
}

namespace {

std::string fresh_state_name(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (std::size_t i = 1; taken.count(name); ++i) name = base + "_" + std::to_string(i);
  taken.insert(name);
  return name;
}

Nfa assemble_paper(const Nfa& a, const Nfa& b, std::set<std::string>& taken) {
  Nfa out;
  const StateId q0 = out.add_state(fresh_state_name("q0", taken));
  const StateId oa = embed(out, a);
  const StateId ob = embed(out, b);
  out.set_start(q0);
  if (a.size()) out.add_transition(q0, std::nullopt, a.start() + oa);
  if (b.size()) out.add_transition(q0, std::nullopt, b.start() + ob);
  for (const auto& t1 : a.transitions()) {
    if (!t1.label) continue;
    for (const auto& t2 : b.transitions()) {
      if (t2.label != t1.label) continue;
      out.add_transition(t1.from + oa, t1.label, t2.to + ob);
      out.add_transition(t2.from + ob, t2.label, t1.to + oa);
    }
  }
  for (auto f : a.finals()) out.add_final(f + oa);
  for (auto f : b.finals()) out.add_final(f + ob);
  out.notes = {"mode: paper",
               "second overlap transition read from the second machine's transition relation"};
  return out;
}

// Pre-phase copies track whether a symbol of the other language has been
// read (parent filter); post-phase copies are plain.
struct Phases {
  StateId pre0, pre1, post;
};

Nfa assemble_single(const Nfa& a, const Nfa& b, ParentInclusion parents) {
  Nfa out;
  const Nfa* machines[2] = {&a, &b};
  const Alphabet useful[2] = {useful_symbols(a), useful_symbols(b)};
  const StateSet acc[2] = {accessible_states(a), accessible_states(b)};
  const StateSet coacc[2] = {coaccessible_states(a), coaccessible_states(b)};

  std::set<std::string> taken;
  for (const auto* m : machines)
    for (StateId s = 0; s < m->size(); ++s) taken.insert(m->name(s));
  const StateId q0 = out.add_state(fresh_state_name("q0", taken));
  out.set_start(q0);

  std::vector<Phases> phase[2];
  for (int k = 0; k < 2; ++k) {
    const Nfa& m = *machines[k];
    for (StateId s = 0; s < m.size(); ++s) {
      Phases p;
      p.pre0 = out.add_state(m.name(s) + "_pre0");
      p.pre1 = out.add_state(m.name(s) + "_pre1");
      p.post = out.add_state(m.name(s) + "_post");
      phase[k].push_back(p);
    }
    for (Symbol x : m.alphabet()) out.add_symbol(x);
  }

  for (int k = 0; k < 2; ++k) {
    const Nfa& m = *machines[k];
    const Alphabet& other_symbols = useful[1 - k];
    if (m.size() == 0) continue;
    const bool initial_seen = parents == ParentInclusion::Always;
    const auto& ps = phase[k];
    out.add_transition(q0, std::nullopt, initial_seen ? ps[m.start()].pre1 : ps[m.start()].pre0);
    for (const auto& t : m.transitions()) {
      const bool hits = t.label && other_symbols.count(*t.label);
      out.add_transition(ps[t.from].pre0, t.label, hits ? ps[t.to].pre1 : ps[t.to].pre0);
      out.add_transition(ps[t.from].pre1, t.label, ps[t.to].pre1);
      out.add_transition(ps[t.from].post, t.label, ps[t.to].post);
    }
    for (auto f : m.finals()) {
      out.add_final(ps[f].pre1);
      out.add_final(ps[f].post);
    }

    // Single switch: a-edge of m into a co-accessible state, overlapped with
    // an a-edge of the other machine leaving an accessible state.
    const Nfa& other = *machines[1 - k];
    for (const auto& t : m.transitions()) {
      if (!t.label || !coacc[k].count(t.to)) continue;
      for (const auto& u : other.transitions()) {
        if (u.label != t.label || !acc[1 - k].count(u.from)) continue;
        const StateId target = phase[1 - k][u.to].post;
        out.add_transition(ps[t.from].pre0, t.label, target);
        out.add_transition(ps[t.from].pre1, t.label, target);
      }
    }
  }
  out.notes = {"mode: single",
               std::string("parents: ") +
                   (parents == ParentInclusion::Always ? "always" : "shared-symbol")};
  return out;
}

}  // namespace

Nfa assemble_nfas(const Nfa& m1, const Nfa& m2, AssemblyMode mode, ParentInclusion parents) {
  std::set<std::string> taken;
  const Nfa a = rename_apart(m1, taken);
  const Nfa b = rename_apart(m2, taken);
  if (mode == AssemblyMode::Paper) return assemble_paper(a, b, taken);
  return assemble_single(a, b, parents);
}

std::optional<std::string> accepting_path(const Nfa& m, std::string_view w) {
  if (m.size() == 0) return std::nullopt;
  // Breadth-first over (state, consumed) configurations with parent links.
  using Config = std::pair<StateId, std::size_t>;
  std::map<Config, std::pair<Config, std::optional<Symbol>>> parent;
  std::deque<Config> queue;
  const Config root{m.start(), 0};
  parent.emplace(root, std::make_pair(root, std::nullopt));
  queue.push_back(root);
  std::optional<Config> goal;
  while (!queue.empty() && !goal) {
    const auto cfg = queue.front();
    queue.pop_front();
    if (cfg.second == w.size() && m.is_final(cfg.first)) {
      goal = cfg;
      break;
    }
    for (const auto& t : m.out(cfg.first)) {
      Config next;
      if (!t.label)
        next = {t.to, cfg.second};
      else if (cfg.second < w.size() && w[cfg.second] == *t.label)
        next = {t.to, cfg.second + 1};
      else
        continue;
      if (parent.emplace(next, std::make_pair(cfg, t.label)).second) queue.push_back(next);
    }
  }
  if (!goal) return std::nullopt;
  std::vector<std::string> parts;
  for (Config c = *goal; c != root;) {
    const auto& [prev, label] = parent.at(c);
    parts.push_back(m.name(c.first));
    parts.push_back(label ? "-" + std::string(1, *label) + "->" : std::string("-ε->"));
    c = prev;
  }
  parts.push_back(m.name(root.first));
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += *it;
  }
  return out;
}

Nfa grammar_to_nfa(const HeadNormalGrammar& g) {
  if (!HeadNormalGrammar::satisfies(g.productions(), GrammarClass::RightLinear))
    throw GrammarError(GrammarError::Kind::NotRightLinear, "grammar_to_nfa needs a right-linear grammar");
  Nfa m;
  std::map<Nonterminal, StateId> state;
  for (const auto& n : g.nonterminals()) state[n] = m.add_state(n);
  std::set<std::string> taken(g.nonterminals().begin(), g.nonterminals().end());
  const StateId sink = m.add_state(fresh_state_name("F", taken));
  m.set_start(state.at(g.start()));
  m.add_final(sink);
  for (const auto& p : g.productions()) {
    if (!p.head) {
      m.add_final(state.at(p.lhs));
      continue;
    }
    m.add_transition(state.at(p.lhs), p.head, p.tail.empty() ? sink : state.at(p.tail[0]));
  }
  for (Symbol a : g.terminals()) m.add_symbol(a);
  return m;
}

HeadNormalGrammar nfa_to_grammar(const Nfa& m) {
  std::set<Nonterminal> used;
  std::vector<Nonterminal> names;
  for (StateId s = 0; s < m.size(); ++s) {
    const auto& n = m.name(s);
    names.push_back(fresh_nonterminal(is_nonterminal_name(n) ? n : "Q" + std::to_string(s), used));
  }
  if (m.size() == 0) return HeadNormalGrammar(fresh_nonterminal("S", used), {}, GrammarClass::RightLinear);

  std::set<Production> prods;
  std::vector<StateSet> closure(m.size());
  for (StateId s = 0; s < m.size(); ++s) closure[s] = epsilon_closure(m, {s});
  auto accepting = [&](StateId s) {
    return std::any_of(closure[s].begin(), closure[s].end(), [&](StateId q) { return m.is_final(q); });
  };
  for (StateId s = 0; s < m.size(); ++s)
    for (auto q : closure[s])
      for (const auto& t : m.out(q)) {
        if (!t.label) continue;
        prods.insert(Production{names[s], t.label, {names[t.to]}});
        if (accepting(t.to)) prods.insert(Production{names[s], t.label, {}});
      }

  Nonterminal start = names[m.start()];
  if (accepting(m.start())) {
    const bool in_tail = std::any_of(prods.begin(), prods.end(), [&](const Production& p) {
      return !p.tail.empty() && p.tail[0] == start;
    });
    if (in_tail) {
      const Nonterminal fresh = fresh_nonterminal("S", used);
      std::vector<Production> copies;
      for (const auto& p : prods)
        if (p.lhs == start) copies.push_back(Production{fresh, p.head, p.tail});
      prods.insert(copies.begin(), copies.end());
      start = fresh;
    }
    prods.insert(Production{start, std::nullopt, {}});
  }
  std::set<Nonterminal> all(names.begin(), names.end());
  return HeadNormalGrammar(start, std::move(prods), GrammarClass::RightLinear, std::move(all),
                           m.alphabet());
}

}  // namespace gsa

namespace gsa {

Nfa nfa_from_words(const FiniteLanguage& lang) {
  Nfa m;
  for (Symbol a : lang.alphabet()) m.add_symbol(a);
  const StateId root = m.add_state();
  m.set_start(root);
  std::map<std::pair<StateId, Symbol>, StateId> child;
  for (const auto& w : lang) {
    StateId s = root;
    for (Symbol a : w) {
      auto [it, fresh] = child.try_emplace({s, a}, 0);
      if (fresh) {
        it->second = m.add_state();
        m.add_transition(s, a, it->second);
      }
      s = it->second;
    }
    m.add_final(s);
  }
  return m;
}

}  // namespace gsa
