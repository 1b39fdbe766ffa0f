// Words, finite languages, splicing rules, and the generalized splicing (GS)
// and generalized self-assembly (GSA) operations on them.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsa {

/// A symbol is one printable, non-whitespace character.
using Symbol = char;

/// A word is a finite (possibly empty) sequence of symbols.
using Word = std::string;

using Alphabet = std::set<Symbol>;

/// Canonical order used for every returned set: shorter first, then
/// lexicographic by symbol.
struct CanonicalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, CanonicalLess>;

/// How parent words enter a self-assembly result.
enum class ParentInclusion {
  /// A parent is included when it shares at least one symbol with the other
  /// operand (the common-substring reading of self-assembly).
  SharedSymbol,
  /// Parents are always included.
  Always,
};

/// A finite set of words together with an alphabet covering them.
class FiniteLanguage {
 public:
  FiniteLanguage() = default;
  FiniteLanguage(std::initializer_list<Word> words);
  explicit FiniteLanguage(WordSet words);

  void insert(Word w);
  void insert(const FiniteLanguage& other);
  /// Widens the declared alphabet; symbols of inserted words are always added.
  void add_symbol(Symbol s) { alphabet_.insert(s); }

  bool contains(std::string_view w) const { return words_.find(w) != words_.end(); }
  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept { return words_.size(); }

  const WordSet& words() const noexcept { return words_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  /// Symbols that actually occur in some word (subset of alphabet()).
  Alphabet used_symbols() const;

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool is_subset_of(const FiniteLanguage& other) const;
  FiniteLanguage minus(const FiniteLanguage& other) const;
  /// Words of length at most `n`.
  FiniteLanguage truncated(std::size_t n) const;

  friend bool operator==(const FiniteLanguage& a, const FiniteLanguage& b) {
    return a.words_ == b.words_;
  }

 private:
  WordSet words_;
  Alphabet alphabet_;
};

/// Splicing rule alpha#beta$alpha2#beta2: the first word is cut between
/// alpha and beta, the second between alpha2 and beta2, and the pieces are
/// recombined crosswise.
struct SplicingRule {
  Word alpha;
  Word beta;
  Word alpha2;
  Word beta2;

  /// Serialized form `alpha#beta$alpha2#beta2`.
  std::string to_string() const;
  /// Parses the serialized form; ε is the empty segment.
  static SplicingRule parse(std::string_view text);

  auto operator<=>(const SplicingRule&) const = default;
};

using RuleSet = std::set<SplicingRule>;

/// (V1, V2, R) with every rule's left pair over V1 and right pair over V2.
struct GsScheme {
  Alphabet v1;
  Alphabet v2;
  RuleSet rules;

  /// Throws std::invalid_argument when a rule leaves its alphabet.
  void validate() const;
};

using WordPair = std::pair<Word, Word>;
using WordPairSet = std::set<WordPair>;

/// All (z1, z2) produced by cutting `x` and `y` at every occurrence of the
/// rule's sites.
WordPairSet splice(const SplicingRule& rule, std::string_view x, std::string_view y);

/// One splice application, kept for provenance reporting.
struct SpliceEvent {
  SplicingRule rule;
  Word x;
  Word y;
  WordPair result;
};

/// sigma_G(L1, L2): every z1 and z2 of every splice over L1 x L2 x rules.
FiniteLanguage gs_finite(const FiniteLanguage& l1, const FiniteLanguage& l2,
                         const RuleSet& rules);

/// Finds one splice application that yields `target`, if any.
std::optional<SpliceEvent> explain_gs_word(const FiniteLanguage& l1, const FiniteLanguage& l2,
                                           const RuleSet& rules, std::string_view target);

/// Single-symbol rules a#$a# for symbols shared by both languages plus one
/// pair rule w1#$w2# per (w1, w2) in L1 x L2.
RuleSet canonical_rules(const FiniteLanguage& l1, const FiniteLanguage& l2);

/// x-self-assembly of two words over the nonempty overlap `x`.
/// Throws std::invalid_argument when `x` is empty.
FiniteLanguage gsa_x(std::string_view w1, std::string_view w2, std::string_view x);

/// Union of gsa_x over every nonempty common substring.
FiniteLanguage gsa_pair(std::string_view w1, std::string_view w2);

/// The same language as gsa_pair, computed from single-symbol overlaps only.
FiniteLanguage gsa_pair_single_letter(std::string_view w1, std::string_view w2);

/// Union of gsa_pair over L1 x L2.
FiniteLanguage gsa_finite(const FiniteLanguage& l1, const FiniteLanguage& l2,
                          ParentInclusion parents = ParentInclusion::SharedSymbol);

/// Renders ε as `@eps`.
std::string display_word(std::string_view w);

bool shares_symbol(std::string_view a, std::string_view b);

}  // namespace gsa
