// Curated and randomized audit suites.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsa/audit.hpp"

namespace gsa {

enum class LanguageClass { Fin, Reg, Lin, Cf };

const char* to_string(LanguageClass c);

/// One side of a suite pair. Finite operands carry their words; the others
/// carry a head-normal grammar.
struct Operand {
  LanguageClass cls = LanguageClass::Fin;
  FiniteLanguage words;
  std::optional<HeadNormalGrammar> grammar;

  static Operand finite(FiniteLanguage words);
  /// Parses grammar text and brings it into head-normal form.
  static Operand from_grammar(LanguageClass cls, std::string_view text);

  Nfa automaton() const;
};

struct SuitePair {
  std::string label;
  Operand a;
  Operand b;
};

/// G1 = {S1 -> a S1 | b}, G2 = {S2 -> b S2 | a}.
std::pair<HeadNormalGrammar, HeadNormalGrammar> worked_example_grammars();

std::vector<SuitePair> curated_finite_pairs();
std::vector<SuitePair> curated_regular_pairs();
std::vector<SuitePair> curated_linear_pairs();
std::vector<SuitePair> curated_cf_pairs();

/// `count` pairs with 1..max_words words each, word lengths 0..max_word_len,
/// over the first 1..max_symbols letters of "abc".
std::vector<SuitePair> random_finite_pairs(std::uint64_t seed, std::size_t count = 50,
                                           std::size_t max_words = 8,
                                           std::size_t max_word_len = 5,
                                           std::size_t max_symbols = 3);

/// Ten or more ε-free context-free grammars, several left-recursive.
std::vector<std::pair<std::string, std::string>> gnf_corpus();

/// Closure checks per class pair: FIN x FIN finiteness, regular pairs by
/// automata algebra, LIN and CF pairs by GNF shape plus bounded equality.
std::vector<AuditReport> audit_closures(const std::vector<SuitePair>& suite,
                                        const AuditConfig& config);

/// Parent depth used for non-regular pairs, where a short prefix may need a
/// much longer parent word.
std::size_t context_free_depth(const AuditConfig& config);

/// Every claim over the curated suites plus `random_finite_pairs(config.seed)`.
/// Reports come back sorted.
std::vector<AuditReport> run_suite(const AuditConfig& config);

}  // namespace gsa
