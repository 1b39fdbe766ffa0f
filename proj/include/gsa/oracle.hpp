// Independent oracles for self-assembly languages.
#pragma once

#include <cstdint>
#include <random>

#include "gsa/core.hpp"

namespace gsa {

/// Words of length <= n in parents ∪ single-symbol crossovers, computed from
/// prefixes of `enum1` words and suffixes of `enum2` words (and vice versa).
///
/// The slices must be exact length-<=parent_depth slices of the parent
/// languages. The result is complete only when every relevant prefix and
/// suffix of length <= n is witnessed by a parent word within the slice.
/// Throws std::invalid_argument when parent_depth < n.
FiniteLanguage gsa_bounded_oracle(const FiniteLanguage& enum1, const FiniteLanguage& enum2,
                                  std::size_t n, std::size_t parent_depth,
                                  ParentInclusion parents = ParentInclusion::SharedSymbol);

/// Deterministic generator for randomized audits. Draws use only the raw
/// mt19937_64 stream, so sequences are identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  Word word(std::size_t min_len, std::size_t max_len, std::string_view alphabet) {
    Word w(between(min_len, max_len), '\0');
    for (auto& c : w) c = alphabet[between(0, alphabet.size() - 1)];
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gsa
