// Test-side reference implementations. They follow the definitions as
// literally as possible and share no code with the library beyond its plain
// data types.
#pragma once

#include <deque>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsa/core.hpp"
#include "gsa/grammar.hpp"

namespace oracle {

using gsa::Word;
using Words = std::set<Word>;

inline bool share(const Word& a, const Word& b) {
  for (char c : a)
    if (b.find(c) != Word::npos) return true;
  return false;
}

/// GSA(w1, w2) over every nonempty common substring and every pair of
/// occurrences.
inline Words gsa_words(const Word& w1, const Word& w2, bool always_parents = false) {
  Words out;
  bool common = false;
  for (std::size_t i = 0; i < w1.size(); ++i)
    for (std::size_t len = 1; i + len <= w1.size(); ++len) {
      const Word x = w1.substr(i, len);
      for (std::size_t j = 0; j + len <= w2.size(); ++j) {
        if (w2.compare(j, len, x) != 0) continue;
        common = true;
        out.insert(w1.substr(0, i) + x + w2.substr(j + len));
        out.insert(w2.substr(0, j) + x + w1.substr(i + len));
      }
    }
  if (common || always_parents) {
    out.insert(w1);
    out.insert(w2);
  }
  return out;
}

inline Words gsa_languages(const Words& l1, const Words& l2, bool always_parents = false) {
  Words out;
  for (const auto& a : l1)
    for (const auto& b : l2)
      for (auto& w : gsa_words(a, b, always_parents)) out.insert(w);
  return out;
}

/// Every (z1, z2) from cutting x after alpha·... and y likewise, by scanning
/// all cut points.
inline std::set<std::pair<Word, Word>> splice_pairs(const Word& alpha, const Word& beta,
                                                    const Word& alpha2, const Word& beta2,
                                                    const Word& x, const Word& y) {
  std::set<std::pair<Word, Word>> out;
  auto sites = [](const Word& w, const Word& l, const Word& r) {
    std::vector<std::size_t> cuts;
    for (std::size_t c = 0; c <= w.size(); ++c)
      if (c >= l.size() && w.compare(c - l.size(), l.size(), l) == 0 && c + r.size() <= w.size() &&
          w.compare(c, r.size(), r) == 0)
        cuts.push_back(c);
    return cuts;
  };
  for (auto i : sites(x, alpha, beta))
    for (auto j : sites(y, alpha2, beta2)) {
      // x = x1 alpha | beta x2, y = y1 alpha2 | beta2 y2
      const Word z1 = x.substr(0, i) + y.substr(j);
      const Word z2 = y.substr(0, j) + x.substr(i);
      out.insert({z1, z2});
    }
  return out;
}

/// Bounded language of an ε-free context-free grammar by breadth-first search
/// over leftmost sentential forms. Forms longer than `n` are dropped, which is
/// exact because no symbol derives ε.
inline Words cfg_words(const gsa::Cfg& g, std::size_t n) {
  using Form = std::vector<gsa::CfgSymbol>;
  Words out;
  std::set<Form> seen;
  std::deque<Form> queue{Form{g.start}};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Form f = std::move(queue.front());
    queue.pop_front();
    std::size_t lead = 0;
    while (lead < f.size() && std::holds_alternative<gsa::Symbol>(f[lead])) ++lead;
    if (lead == f.size()) {
      Word w;
      for (const auto& s : f) w += std::get<gsa::Symbol>(s);
      out.insert(w);
      continue;
    }
    const auto& nt = std::get<gsa::Nonterminal>(f[lead]);
    for (const auto& p : g.productions) {
      if (p.lhs != nt) continue;
      Form next(f.begin(), f.begin() + lead);
      next.insert(next.end(), p.rhs.begin(), p.rhs.end());
      next.insert(next.end(), f.begin() + lead + 1, f.end());
      if (next.size() > n) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

/// All words over `alphabet` of length 0..n in canonical order.
inline std::vector<Word> all_words(const std::string& alphabet, std::size_t n) {
  std::vector<Word> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (char c : alphabet) out.push_back(out[i] + c);
  }
  return out;
}

inline Words filter(const std::string& alphabet, std::size_t n,
                      const std::function<bool(const Word&)>& keep) {
  Words out;
  for (auto& w : all_words(alphabet, n))
    if (keep(w)) out.insert(w);
  return out;
}

/// GSA(a*b, b*a) in closed form: both parents, a+, b+, a*b+a and b*a+b.
inline bool in_gsa_astar_b_bstar_a(const Word& w) {
  auto run = [&](std::size_t& i, char c) {
    std::size_t k = 0;
    while (i < w.size() && w[i] == c) ++i, ++k;
    return k;
  };
  auto shape = [&](char p, char q) {
    // p* q+ p : prefix p^k, then q^m (m >= 1), then a single p.
    std::size_t i = 0;
    run(i, p);
    const std::size_t m = run(i, q);
    return m >= 1 && i + 1 == w.size() && w[i] == p;
  };
  auto power_then = [&](char p, char q) {
    // p* q
    std::size_t i = 0;
    run(i, p);
    return i + 1 == w.size() && w[i] == q;
  };
  auto all_of = [&](char c) { return !w.empty() && w.find_first_not_of(c) == Word::npos; };
  return power_then('a', 'b') || power_then('b', 'a') || all_of('a') || all_of('b') ||
         shape('a', 'b') || shape('b', 'a');
}

template <class Lang>
inline Words as_set(const Lang& l) {
  return Words(l.begin(), l.end());
}

}  // namespace oracle
