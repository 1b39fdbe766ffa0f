#include "gsa/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gsa {

std::size_t Dfa::symbol_index(Symbol a) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end() || *it != a) return alphabet.size();
  return static_cast<std::size_t>(it - alphabet.begin());
}

bool Dfa::accepts(std::string_view w) const {
  std::size_t s = 0;
  for (Symbol a : w) {
    const auto i = symbol_index(a);
    if (i == alphabet.size()) return false;
    s = delta[s][i];
  }
  return accepting[s];
}

Dfa determinize(const Nfa& m, const Alphabet& alphabet) {
  Dfa d;
  d.alphabet.assign(alphabet.begin(), alphabet.end());
  std::map<StateSet, std::size_t> index;
  std::vector<StateSet> sets;
  auto intern = [&](StateSet s) {
    auto [it, inserted] = index.emplace(s, sets.size());
    if (inserted) {
      sets.push_back(std::move(s));
      d.delta.emplace_back(d.alphabet.size(), 0);
      const auto& set = sets.back();
      d.accepting.push_back(std::any_of(set.begin(), set.end(), [&](StateId q) { return m.is_final(q); }));
    }
    return it->second;
  };
  intern(m.size() ? epsilon_closure(m, {m.start()}) : StateSet{});
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t k = 0; k < d.alphabet.size(); ++k) {
      auto next = step(m, sets[i], d.alphabet[k]);
      const auto target = intern(std::move(next));
      d.delta[i][k] = target;
    }
  return d;
}

Dfa determinize(const Nfa& m) { return determinize(m, m.alphabet()); }

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (std::size_t i = 0; i < out.accepting.size(); ++i) out.accepting[i] = !d.accepting[i];
  return out;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("intersect: alphabets differ");
  Dfa out;
  out.alphabet = a.alphabet;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto intern = [&](std::pair<std::size_t, std::size_t> p) {
    auto [it, inserted] = index.emplace(p, pairs.size());
    if (inserted) {
      pairs.push_back(p);
      out.delta.emplace_back(out.alphabet.size(), 0);
      out.accepting.push_back(a.accepting[p.first] && b.accepting[p.second]);
    }
    return it->second;
  };
  intern({0, 0});
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t k = 0; k < out.alphabet.size(); ++k) {
      const auto [p, q] = pairs[i];
      const auto target = intern({a.delta[p][k], b.delta[q][k]});
      out.delta[i][k] = target;
    }
  return out;
}

std::optional<Word> shortest_word(const Dfa& d) {
  if (d.size() == 0) return std::nullopt;
  // BFS visiting symbols in ascending order yields the canonical-least
  // shortest word.
  std::vector<std::optional<std::pair<std::size_t, Symbol>>> parent(d.size());
  std::vector<bool> seen(d.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    if (d.accepting[s]) {
      Word w;
      for (auto cur = s; parent[cur]; cur = parent[cur]->first) w.push_back(parent[cur]->second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t k = 0; k < d.alphabet.size(); ++k) {
      const auto t = d.delta[s][k];
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = std::make_pair(s, d.alphabet[k]);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

bool is_empty(const Dfa& d) { return !shortest_word(d).has_value(); }

Nfa to_nfa(const Dfa& d) {
  Nfa m;
  for (std::size_t s = 0; s < d.size(); ++s) m.add_state("d" + std::to_string(s));
  if (d.size()) m.set_start(0);
  for (std::size_t s = 0; s < d.size(); ++s) {
    if (d.accepting[s]) m.add_final(s);
    for (std::size_t k = 0; k < d.alphabet.size(); ++k) m.add_transition(s, d.alphabet[k], d.delta[s][k]);
  }
  for (Symbol a : d.alphabet) m.add_symbol(a);
  return m;
}

namespace {

Alphabet joint_alphabet(const Nfa& a, const Nfa& b) {
  Alphabet out = a.alphabet();
  out.insert(b.alphabet().begin(), b.alphabet().end());
  return out;
}

}  // namespace

std::optional<Word> inclusion_counterexample(const Nfa& a, const Nfa& b) {
  const auto sigma = joint_alphabet(a, b);
  return shortest_word(intersect(determinize(a, sigma), complement(determinize(b, sigma))));
}

Equivalence equivalent(const Nfa& a, const Nfa& b) {
  const auto sigma = joint_alphabet(a, b);
  const Dfa da = determinize(a, sigma);
  const Dfa db = determinize(b, sigma);
  const auto only_a = shortest_word(intersect(da, complement(db)));
  const auto only_b = shortest_word(intersect(complement(da), db));
  Equivalence out;
  if (!only_a && !only_b) return out;
  out.equal = false;
  if (only_a && (!only_b || !CanonicalLess{}(*only_b, *only_a))) {
    out.witness = only_a;
    out.accepted_by = 1;
  } else {
    out.witness = only_b;
    out.accepted_by = 2;
  }
  return out;
}

}  // namespace gsa
