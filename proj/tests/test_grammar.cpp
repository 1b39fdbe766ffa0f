#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsa/grammar.hpp"
#include "gsa/grammar_assembly.hpp"
#include "gsa/grammar_io.hpp"
#include "gsa/normalize.hpp"
#include "gsa/suite.hpp"
#include "oracles.hpp"

using namespace gsa;
using oracle::as_set;
using oracle::Words;

namespace {

HeadNormalGrammar hn(std::string_view text) {
  auto g = as_head_normal(parse_grammar(text));
  REQUIRE(g);
  return *g;
}

std::set<std::string> production_strings(const HeadNormalGrammar& g) {
  std::set<std::string> out;
  for (const auto& p : g.productions()) out.insert(to_string(p));
  return out;
}

Words truncate(const Words& s, std::size_t n) {
  Words out;
  for (const auto& w : s)
    if (w.size() <= n) out.insert(w);
  return out;
}

const std::string_view kAStarB = "start: S1\nS1 -> a S1\nS1 -> b\n";
const std::string_view kBStarA = "start: S2\nS2 -> b S2\nS2 -> a\n";

}  // namespace

TEST_CASE("grammar text round-trips") {
  const auto cfg = parse_grammar("# header\nstart: S\nS -> a S B  # tail\nB -> b\nS -> @eps\n", "g.gr");
  CHECK(cfg.start == "S");
  CHECK(cfg.productions.size() == 3);
  CHECK(parse_grammar(format_cfg(cfg)).productions == cfg.productions);

  const auto g = hn(kAStarB);
  const auto again = as_head_normal(parse_grammar(format_grammar(g)));
  REQUIRE(again);
  CHECK(again->productions() == g.productions());
  CHECK(again->start() == g.start());
}

TEST_CASE("grammar parse errors carry line and column") {
  try {
    parse_grammar("start: S\nS -> a\nS => b\n", "g.gr");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).rfind("g.gr:3:3:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_grammar("S -> a\n"), ParseError);               // no start line
  CHECK_THROWS_AS(parse_grammar("start: S\nS -> ab\n"), ParseError);    // multi-char terminal
}

TEST_CASE("head-normal invariants") {
  const Production eps{"E", std::nullopt, {}};
  const Production uses_e{"S", 'a', {"E"}};
  CHECK_THROWS_AS(HeadNormalGrammar("S", {eps, uses_e}, GrammarClass::Gnf), GrammarError);
  const Production long_tail{"S", 'a', {"S", "S"}};
  CHECK_THROWS_AS(HeadNormalGrammar("S", {long_tail, {"S", 'b', {}}}, GrammarClass::RightLinear),
                  GrammarError);
  CHECK_NOTHROW(HeadNormalGrammar("S", {long_tail, {"S", 'b', {}}}, GrammarClass::Gnf));
  CHECK_FALSE(as_head_normal(parse_grammar("start: S\nS -> S a\nS -> b\n")));
}

TEST_CASE("worked example assembles to the listed production set") {
  const auto [g1, g2] = worked_example_grammars();
  const auto g = assemble_grammars(g1, g2, AssemblyMode::Paper);
  CHECK(g.class_tag() == GrammarClass::RightLinear);
  const std::set<std::string> s1{"S1 -> a S1", "S1 -> b", "S1 -> b S2", "S1 -> a"};
  const std::set<std::string> s2{"S2 -> a S1", "S2 -> b S2", "S2 -> a", "S2 -> b"};
  std::set<std::string> expected = s1;
  expected.insert(s2.begin(), s2.end());
  // Start aliasing: every S1 and S2 production is copied onto S.
  for (const auto* side : {&s1, &s2})
    for (const auto& p : *side) expected.insert("S" + p.substr(2));
  CHECK(production_strings(g) == expected);
  CHECK(g.start() == "S");
  bool noted = false;
  for (const auto& n : g.notes) noted = noted || n.find("aliasing") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("colliding nonterminals are renamed apart") {
  const auto g1 = hn("start: S\nS -> a S\nS -> b\n");
  const auto g2 = hn("start: S\nS -> b S\nS -> a\n");
  const auto g = assemble_grammars(g1, g2, AssemblyMode::Paper);
  CHECK(g.nonterminals().size() == 3);
  const auto [w1, w2] = worked_example_grammars();
  CHECK(enumerate_grammar(g, 6) == enumerate_grammar(assemble_grammars(w1, w2, AssemblyMode::Paper), 6));
}

TEST_CASE("disjoint terminals give no cross productions") {
  const auto g1 = hn("start: A\nA -> a A\nA -> a\n");
  const auto g2 = hn("start: B\nB -> b B\nB -> b\n");
  const auto g = assemble_grammars(g1, g2, AssemblyMode::Paper);
  for (const auto& p : g.productions()) {
    if (p.lhs == "A") CHECK(p.head == 'a');
    if (p.lhs == "B") CHECK(p.head == 'b');
    for (const auto& t : p.tail) CHECK((t == p.lhs || p.lhs == g.start()));
  }
  CHECK(as_set(enumerate_grammar(g, 4)) ==
        Words{"a", "b", "aa", "bb", "aaa", "bbb", "aaaa", "bbbb"});
}

TEST_CASE("enumeration examples") {
  const auto g = hn(kAStarB);
  CHECK(enumerate_grammar(g, 3) == FiniteLanguage{"b", "ab", "aab"});
  CHECK(enumerate_grammar(g, 0).empty());
  const auto [g1, g2] = worked_example_grammars();
  const auto paper = assemble_grammars(g1, g2, AssemblyMode::Paper);
  CHECK(enumerate_grammar(paper, 4).contains("abab"));
}

TEST_CASE("membership examples") {
  const auto g = hn(kAStarB);
  CHECK(gnf_membership(g, "aab"));
  CHECK_FALSE(gnf_membership(g, "ba"));
  const auto [g1, g2] = worked_example_grammars();
  const auto paper = assemble_grammars(g1, g2, AssemblyMode::Paper);
  CHECK(gnf_membership(paper, "abab"));

  const auto trace = derivation_trace(paper, "abab");
  REQUIRE(trace);
  CHECK(trace->front() == "S");
  CHECK(trace->back() == "a b a b");
  CHECK_FALSE(derivation_trace(g, "ba"));
}

TEST_CASE("membership agrees with enumeration") {
  for (const auto& [name, text] : gnf_corpus()) {
    const auto g = cfg_to_gnf(parse_grammar(text));
    const auto slice = enumerate_grammar(g, 7);
    for (const auto& w : oracle::all_words(std::string(g.terminals().begin(), g.terminals().end()), 7)) {
      if (w.empty()) continue;
      INFO(name, ": ", w);
      CHECK(gnf_membership(g, w) == slice.contains(w));
    }
  }
}

TEST_CASE("GNF conversion preserves the language up to length 8") {
  const auto corpus = gnf_corpus();
  CHECK(corpus.size() >= 10);
  for (const auto& [name, text] : corpus) {
    INFO(name);
    const auto cfg = parse_grammar(text);
    const auto g = cfg_to_gnf(cfg);
    CHECK(g.class_tag() == GrammarClass::Gnf);
    CHECK(HeadNormalGrammar::satisfies(g.productions(), GrammarClass::Gnf));
    CHECK(as_set(enumerate_grammar(g, 8)) == oracle::cfg_words(cfg, 8));
  }
}

TEST_CASE("GNF conversion of a left-recursive grammar") {
  const auto g = cfg_to_gnf(parse_grammar("start: S\nS -> S a\nS -> b\n"));
  CHECK(as_set(enumerate_grammar(g, 5)) == Words{"b", "ba", "baa", "baaa", "baaaa"});
}

TEST_CASE("GNF conversion errors") {
  try {
    cfg_to_gnf(parse_grammar("start: S\nS -> A\nA -> S\n"));
    FAIL("expected an error");
  } catch (const GrammarError& e) {
    CHECK(e.kind() == GrammarError::Kind::EmptyLanguage);
  }
  try {
    cfg_to_gnf(parse_grammar("start: S\nS -> a S\nS -> @eps\n"));
    FAIL("expected an error");
  } catch (const GrammarError& e) {
    CHECK(e.kind() == GrammarError::Kind::EpsilonProduction);
  }
  const auto already = hn(kAStarB);
  CHECK(enumerate_grammar(cfg_to_gnf(to_cfg(already)), 8) == enumerate_grammar(already, 8));
}

TEST_CASE("right-linear normalization") {
  const auto cfg = parse_grammar("start: S\nS -> a b S\nS -> c\n");
  const auto g = normalize_right_linear(cfg);
  CHECK(g.class_tag() == GrammarClass::RightLinear);
  CHECK(g.productions().size() == 3);
  CHECK(as_set(enumerate_grammar(g, 8)) == oracle::cfg_words(cfg, 8));

  const auto fixed = normalize_right_linear(to_cfg(hn(kAStarB)));
  CHECK(enumerate_grammar(fixed, 8) == enumerate_grammar(hn(kAStarB), 8));

  try {
    normalize_right_linear(parse_grammar("start: S\nS -> @eps\n"));
    FAIL("expected an error");
  } catch (const GrammarError& e) {
    CHECK(e.kind() == GrammarError::Kind::EpsilonInLanguage);
  }
  CHECK_THROWS_AS(normalize_right_linear(parse_grammar("start: S\nS -> S a\nS -> b\n")), GrammarError);

  // Unit and ε rules inside the grammar are closed over.
  const auto units = parse_grammar("start: S\nS -> A\nA -> a A\nA -> B\nB -> b\nB -> @eps\nS -> c\n");
  const auto n = normalize_right_linear(units, {.allow_start_epsilon = true});
  Words expected{"", "c"};
  for (auto& w : oracle::all_words("ab", 6))
    if (!w.empty() && w.find_first_not_of('a') != Word::npos && w.find_first_not_of('a') == w.size() - 1)
      expected.insert(w);  // a*b
  for (auto& w : oracle::all_words("a", 6)) if (!w.empty()) expected.insert(w);  // a+
  CHECK(as_set(enumerate_grammar(n, 6)) == expected);
}

TEST_CASE("assembly keeps parent languages") {
  for (const auto& p : curated_regular_pairs()) {
    INFO(p.label);
    const auto& g1 = *p.a.grammar;
    const auto& g2 = *p.b.grammar;
    auto parents = enumerate_grammar(g1, 10);
    parents.insert(enumerate_grammar(g2, 10));
    CHECK(parents.is_subset_of(enumerate_grammar(assemble_grammars(g1, g2, AssemblyMode::Paper), 10)));
    const auto single = assemble_grammars(g1, g2, AssemblyMode::SingleCrossover, ParentInclusion::Always);
    CHECK(parents.is_subset_of(enumerate_grammar(single, 10)));
  }
}

TEST_CASE("single-crossover assembly of the worked example matches the closed form") {
  const auto [g1, g2] = worked_example_grammars();
  const auto g = assemble_grammars(g1, g2, AssemblyMode::SingleCrossover);
  CHECK(as_set(enumerate_grammar(g, 10)) == oracle::filter("ab", 10, oracle::in_gsa_astar_b_bstar_a));
  const auto paper = assemble_grammars(g1, g2, AssemblyMode::Paper);
  CHECK_FALSE(oracle::in_gsa_astar_b_bstar_a("abab"));
  CHECK(enumerate_grammar(paper, 10).contains("abab"));
}

TEST_CASE("single-crossover assembly of context-free pairs matches brute force") {
  std::vector<SuitePair> pairs = curated_linear_pairs();
  for (auto& p : curated_cf_pairs()) pairs.push_back(std::move(p));
  const std::size_t n = 7;
  for (const auto& p : pairs) {
    INFO(p.label);
    const auto l1 = oracle::cfg_words(to_cfg(*p.a.grammar), 2 * n + 2);
    const auto l2 = oracle::cfg_words(to_cfg(*p.b.grammar), 2 * n + 2);
    const auto expected = truncate(oracle::gsa_languages(l1, l2), n);
    const auto g = assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::SingleCrossover);
    CHECK(g.class_tag() == GrammarClass::Gnf);
    CHECK(HeadNormalGrammar::satisfies(g.productions(), GrammarClass::Gnf));
    CHECK(as_set(enumerate_grammar(g, n)) == expected);
  }
}

TEST_CASE("class closure of paper-mode assembly") {
  for (const auto& p : curated_regular_pairs()) {
    const auto g = assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper);
    CHECK(g.class_tag() == GrammarClass::RightLinear);
    CHECK(HeadNormalGrammar::satisfies(g.productions(), GrammarClass::RightLinear));
  }
  for (const auto& p : curated_cf_pairs()) {
    const auto g = assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper);
    CHECK(g.class_tag() == GrammarClass::Gnf);
    CHECK(HeadNormalGrammar::satisfies(g.productions(), GrammarClass::Gnf));
  }
}

TEST_CASE("paper-mode inclusion of the crossover language for regular pairs") {
  for (const auto& p : curated_regular_pairs()) {
    INFO(p.label);
    const auto l1 = as_set(enumerate_grammar(*p.a.grammar, 8));
    const auto l2 = as_set(enumerate_grammar(*p.b.grammar, 8));
    const auto crossovers = truncate(oracle::gsa_languages(l1, l2), 6);
    const auto assembled =
        as_set(enumerate_grammar(assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper), 6));
    for (const auto& w : crossovers) CHECK(assembled.count(w));
  }
}

TEST_CASE("minimum yields and trimming") {
  const auto g = hn("start: S\nS -> a S\nS -> b\nS -> a U\nU -> a U\nV -> c\n");
  const auto y = min_yield(g);
  CHECK(y.at("S") == 1);
  CHECK(y.count("U") == 0);
  const auto t = trim(g);
  CHECK(t.nonterminals() == std::set<Nonterminal>{"S"});
  CHECK(used_terminals(g) == Alphabet{'a', 'b'});
}
