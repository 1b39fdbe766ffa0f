#include "gsa/core.hpp"

#include <algorithm>

namespace gsa {

FiniteLanguage::FiniteLanguage(std::initializer_list<Word> words) {
  for (const auto& w : words) insert(w);
}

FiniteLanguage::FiniteLanguage(WordSet words) {
  for (const auto& w : words) alphabet_.insert(w.begin(), w.end());
  words_ = std::move(words);
}

void FiniteLanguage::insert(Word w) {
  alphabet_.insert(w.begin(), w.end());
  words_.insert(std::move(w));
}

void FiniteLanguage::insert(const FiniteLanguage& other) {
  words_.insert(other.words_.begin(), other.words_.end());
  alphabet_.insert(other.alphabet_.begin(), other.alphabet_.end());
}

Alphabet FiniteLanguage::used_symbols() const {
  Alphabet out;
  for (const auto& w : words_) out.insert(w.begin(), w.end());
  return out;
}

bool FiniteLanguage::is_subset_of(const FiniteLanguage& other) const {
  return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end(),
                       CanonicalLess{});
}

FiniteLanguage FiniteLanguage::minus(const FiniteLanguage& other) const {
  FiniteLanguage out;
  for (const auto& w : words_)
    if (!other.contains(w)) out.insert(w);
  return out;
}

FiniteLanguage FiniteLanguage::truncated(std::size_t n) const {
  FiniteLanguage out;
  for (const auto& w : words_) {
    if (w.size() > n) break;  // canonical order is length-first
    out.insert(w);
  }
  return out;
}

std::string SplicingRule::to_string() const {
  return alpha + "#" + beta + "$" + alpha2 + "#" + beta2;
}

SplicingRule SplicingRule::parse(std::string_view text) {
  const auto dollar = text.find('$');
  if (dollar == std::string_view::npos || text.find('$', dollar + 1) != std::string_view::npos)
    throw std::invalid_argument("splicing rule needs exactly one '$': " + std::string(text));
  auto split = [&](std::string_view half) {
    const auto hash = half.find('#');
    if (hash == std::string_view::npos || half.find('#', hash + 1) != std::string_view::npos)
      throw std::invalid_argument("each rule half needs exactly one '#': " + std::string(text));
    return std::pair<Word, Word>{Word(half.substr(0, hash)), Word(half.substr(hash + 1))};
  };
  auto [a, b] = split(text.substr(0, dollar));
  auto [a2, b2] = split(text.substr(dollar + 1));
  return SplicingRule{std::move(a), std::move(b), std::move(a2), std::move(b2)};
}

void GsScheme::validate() const {
  auto within = [](const Word& w, const Alphabet& v) {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return v.count(s) > 0; });
  };
  for (const auto& r : rules) {
    if (!within(r.alpha, v1) || !within(r.beta, v1))
      throw std::invalid_argument("rule " + r.to_string() + " leaves the first alphabet");
    if (!within(r.alpha2, v2) || !within(r.beta2, v2))
      throw std::invalid_argument("rule " + r.to_string() + " leaves the second alphabet");
  }
}

namespace {

// Start offsets of every occurrence of `needle` in `hay` (overlapping; the
// empty needle occurs at every position).
std::vector<std::size_t> occurrences(std::string_view hay, std::string_view needle) {
  std::vector<std::size_t> out;
  if (needle.size() > hay.size()) return out;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (hay.substr(i, needle.size()) == needle) out.push_back(i);
  return out;
}

}  // namespace

WordPairSet splice(const SplicingRule& rule, std::string_view x, std::string_view y) {
  WordPairSet out;
  const Word site1 = rule.alpha + rule.beta;
  const Word site2 = rule.alpha2 + rule.beta2;
  const auto xs = occurrences(x, site1);
  const auto ys = occurrences(y, site2);
  for (auto i : xs) {
    // x = x1 . alpha . beta . x2
    const auto x1 = x.substr(0, i);
    const auto x2 = x.substr(i + site1.size());
    for (auto j : ys) {
      const auto y1 = y.substr(0, j);
      const auto y2 = y.substr(j + site2.size());
      Word z1 = Word(x1) + rule.alpha + rule.beta2 + Word(y2);
      Word z2 = Word(y1) + rule.alpha2 + rule.beta + Word(x2);
      out.emplace(std::move(z1), std::move(z2));
    }
  }
  return out;
}

FiniteLanguage gs_finite(const FiniteLanguage& l1, const FiniteLanguage& l2,
                         const RuleSet& rules) {
  FiniteLanguage out;
  for (const auto& x : l1)
    for (const auto& y : l2)
      for (const auto& r : rules)
        for (auto& [z1, z2] : splice(r, x, y)) {
          out.insert(z1);
          out.insert(z2);
        }
  return out;
}

std::optional<SpliceEvent> explain_gs_word(const FiniteLanguage& l1, const FiniteLanguage& l2,
                                           const RuleSet& rules, std::string_view target) {
  for (const auto& x : l1)
    for (const auto& y : l2)
      for (const auto& r : rules)
        for (const auto& pair : splice(r, x, y))
          if (pair.first == target || pair.second == target)
            return SpliceEvent{r, x, y, pair};
  return std::nullopt;
}

RuleSet canonical_rules(const FiniteLanguage& l1, const FiniteLanguage& l2) {
  RuleSet rules;
  const auto s1 = l1.used_symbols();
  const auto s2 = l2.used_symbols();
  for (Symbol a : s1)
    if (s2.count(a)) rules.insert(SplicingRule{Word(1, a), "", Word(1, a), ""});
  for (const auto& w1 : l1)
    for (const auto& w2 : l2) rules.insert(SplicingRule{w1, "", w2, ""});
  return rules;
}

FiniteLanguage gsa_x(std::string_view w1, std::string_view w2, std::string_view x) {
  if (x.empty()) throw std::invalid_argument("gsa_x: overlap must be nonempty");
  FiniteLanguage out;
  const auto o1 = occurrences(w1, x);
  const auto o2 = occurrences(w2, x);
  if (o1.empty() || o2.empty()) return out;
  out.insert(Word(w1));
  out.insert(Word(w2));
  for (auto i : o1) {
    const auto u1 = w1.substr(0, i);
    const auto v1 = w1.substr(i + x.size());
    for (auto j : o2) {
      const auto u2 = w2.substr(0, j);
      const auto v2 = w2.substr(j + x.size());
      out.insert(Word(u1) + Word(x) + Word(v2));
      out.insert(Word(u2) + Word(x) + Word(v1));
    }
  }
  return out;
}

FiniteLanguage gsa_pair(std::string_view w1, std::string_view w2) {
  FiniteLanguage out;
  std::set<Word> seen;
  for (std::size_t i = 0; i < w1.size(); ++i)
    for (std::size_t len = 1; i + len <= w1.size(); ++len) {
      Word x(w1.substr(i, len));
      if (!seen.insert(x).second) continue;
      if (w2.find(x) == std::string_view::npos) break;  // longer extensions miss too
      out.insert(gsa_x(w1, w2, x));
    }
  return out;
}

FiniteLanguage gsa_pair_single_letter(std::string_view w1, std::string_view w2) {
  FiniteLanguage out;
  if (!shares_symbol(w1, w2)) return out;
  out.insert(Word(w1));
  out.insert(Word(w2));
  for (std::size_t i = 0; i < w1.size(); ++i)
    for (std::size_t j = 0; j < w2.size(); ++j) {
      if (w1[i] != w2[j]) continue;
      out.insert(Word(w1.substr(0, i + 1)) + Word(w2.substr(j + 1)));
      out.insert(Word(w2.substr(0, j + 1)) + Word(w1.substr(i + 1)));
    }
  return out;
}

FiniteLanguage gsa_finite(const FiniteLanguage& l1, const FiniteLanguage& l2,
                          ParentInclusion parents) {
  FiniteLanguage out;
  for (const auto& w1 : l1)
    for (const auto& w2 : l2) out.insert(gsa_pair(w1, w2));
  if (parents == ParentInclusion::Always) {
    out.insert(l1);
    out.insert(l2);
  }
  return out;
}

std::string display_word(std::string_view w) {
  return w.empty() ? std::string("@eps") : std::string(w);
}

bool shares_symbol(std::string_view a, std::string_view b) {
  return std::any_of(a.begin(), a.end(),
                     [&](Symbol s) { return b.find(s) != std::string_view::npos; });
}

}  // namespace gsa
