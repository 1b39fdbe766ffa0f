#include "gsa/oracle.hpp"

#include <map>

namespace gsa {

namespace {

void add_crossovers(const FiniteLanguage& left, const FiniteLanguage& right, std::size_t n,
                    FiniteLanguage& out) {
  // Suffixes of right-side words, bucketed by their first symbol.
  std::map<Symbol, WordSet> suffixes;
  for (const auto& w : right)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.size() - i <= n) suffixes[w[i]].insert(w.substr(i));
  WordSet prefixes;
  for (const auto& w : left)
    for (std::size_t len = 1; len <= std::min(w.size(), n); ++len) prefixes.insert(w.substr(0, len));
  for (const auto& p : prefixes) {
    auto it = suffixes.find(p.back());
    if (it == suffixes.end()) continue;
    for (const auto& s : it->second) {
      if (p.size() + s.size() - 1 > n) break;  // length-ordered
      out.insert(p + s.substr(1));
    }
  }
}

}  // namespace

FiniteLanguage gsa_bounded_oracle(const FiniteLanguage& enum1, const FiniteLanguage& enum2,
                                  std::size_t n, std::size_t parent_depth, ParentInclusion parents) {
  if (parent_depth < n)
    throw std::invalid_argument("gsa_bounded_oracle: parent_depth " + std::to_string(parent_depth) +
                                " is below the word bound " + std::to_string(n));
  FiniteLanguage out;
  if (n == 0) return out;
  const Alphabet sym1 = enum1.used_symbols();
  const Alphabet sym2 = enum2.used_symbols();
  auto parent_ok = [&](const Word& w, const Alphabet& other) {
    if (parents == ParentInclusion::Always) return true;
    for (Symbol s : w)
      if (other.count(s)) return true;
    return false;
  };
  for (const auto& w : enum1.truncated(n))
    if (parent_ok(w, sym2)) out.insert(w);
  for (const auto& w : enum2.truncated(n))
    if (parent_ok(w, sym1)) out.insert(w);
  add_crossovers(enum1, enum2, n, out);
  add_crossovers(enum2, enum1, n, out);
  return out;
}

}  // namespace gsa
