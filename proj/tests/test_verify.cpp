#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gsa/audit.hpp"
#include "gsa/oracle.hpp"
#include "gsa/report.hpp"
#include "gsa/suite.hpp"
#include "oracles.hpp"

using namespace gsa;
using oracle::as_set;
using oracle::Words;

namespace {

bool listed(const AuditReport& r, const Word& w, const std::string& side) {
  return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                     [&](const Counterexample& c) { return c.word == w && c.side == side; });
}

const Nfa& astar_b_nfa() {
  static const Nfa m = grammar_to_nfa(worked_example_grammars().first);
  return m;
}
const Nfa& bstar_a_nfa() {
  static const Nfa m = grammar_to_nfa(worked_example_grammars().second);
  return m;
}

}  // namespace

TEST_CASE("GS equals GSA on the curated finite pairs") {
  for (const auto& p : curated_finite_pairs()) {
    INFO(p.label);
    const auto r = audit_gs_eq_gsa(p.a.words, p.b.words);
    CHECK(r.verdict == Verdict::HoldsExactly);
    CHECK(r.method == method::kFiniteExhaustive);
    CHECK(r.hard_invariant_holds);
    CHECK(r.counterexamples.empty());
    CHECK_NOTHROW(check_report(r));
  }
}

TEST_CASE("GS versus GSA on random pairs") {
  std::size_t failing = 0;
  for (const auto& p : random_finite_pairs(0)) {
    INFO(p.label);
    const auto r = audit_gs_eq_gsa(p.a.words, p.b.words);
    CHECK(r.hard_invariant_holds);
    CHECK_NOTHROW(check_report(r));
    const auto gs = gs_finite(p.a.words, p.b.words, canonical_rules(p.a.words, p.b.words));
    const auto gsa = oracle::gsa_languages(as_set(p.a.words), as_set(p.b.words));
    // GSA ⊆ GS against the literal definition, independently of the report.
    for (const auto& w : gsa) CHECK(gs.contains(w));
    std::size_t extra = 0;
    for (const auto& w : gs) extra += gsa.count(w) == 0;
    CHECK(r.counterexample_total == extra);
    if (extra == 0) {
      CHECK(r.verdict == Verdict::HoldsExactly);
      continue;
    }
    ++failing;
    CHECK(r.verdict == Verdict::Fails);
    for (const auto& c : r.counterexamples) {
      CHECK(c.side == "lhs_only");
      CHECK(gsa.count(c.word) == 0);
      CHECK(c.trace.find("rule ") == 0);
    }
  }
  // Pair rules reach inner occurrences, so the plain equality does not hold
  // for every random pair.
  CHECK(failing > 0);
}

TEST_CASE("random finite pairs are seeded") {
  const auto a = random_finite_pairs(0), b = random_finite_pairs(0), c = random_finite_pairs(1);
  REQUIRE(a.size() == 50);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a.words == b[i].a.words);
    CHECK(a[i].b.words == b[i].b.words);
    differs = differs || a[i].a.words != c[i].a.words;
    for (const auto& w : a[i].a.words) CHECK((!w.empty() && w.size() <= 5));
  }
  CHECK(differs);
}

TEST_CASE("FIN x FIN closure is exhaustive and finite") {
  SeededRng rng(2);
  for (int i = 0; i < 30; ++i) {
    FiniteLanguage l1, l2;
    for (int k = 0; k < 4; ++k) {
      l1.insert(rng.word(1, 4, "ab"));
      l2.insert(rng.word(1, 4, "abc"));
    }
    const auto r = audit_fin_fin(l1, l2);
    CHECK(r.verdict == Verdict::HoldsExactly);
    CHECK(r.details["cardinality"].get<std::size_t>() ==
          oracle::gsa_languages(as_set(l1), as_set(l2)).size());
    CHECK(r.details["longest_word"].get<std::size_t>() <= 7);
  }
}

TEST_CASE("paper grammar assembly of the worked example fails the bounded check") {
  const auto [g1, g2] = worked_example_grammars();
  const auto r = audit_grammar_theorem(g1, g2, AssemblyMode::Paper);
  CHECK(r.verdict == Verdict::Fails);
  CHECK(r.method == method::kBoundedEnumeration);
  CHECK(listed(r, "abab", "lhs_only"));
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().word == "abb");
  for (const auto& c : r.counterexamples) {
    CHECK_FALSE(oracle::in_gsa_astar_b_bstar_a(c.word));
    CHECK(c.trace.find(" => ") != std::string::npos);
  }
  // Every oracle word is generated: Part I holds for right-linear inputs.
  CHECK(r.details["rhs_subset_of_lhs"] == true);
  CHECK(r.hard_invariant_holds);
  CHECK(r.bounds.max_len == 10u);
  CHECK(r.bounds.parent_depth == 14u);
}

TEST_CASE("single-crossover grammar assembly matches the closed form") {
  const auto [g1, g2] = worked_example_grammars();
  const auto r = audit_grammar_theorem(g1, g2, AssemblyMode::SingleCrossover);
  CHECK(r.verdict == Verdict::HoldsWithinBounds);
  CHECK(r.counterexample_total == 0);
  CHECK(r.details["rhs_size"].get<std::size_t>() ==
        oracle::filter("ab", 10, oracle::in_gsa_astar_b_bstar_a).size());
}

TEST_CASE("automata theorem on the worked example") {
  const auto paper = audit_automata_theorem(astar_b_nfa(), bstar_a_nfa(), AssemblyMode::Paper);
  CHECK(paper.verdict == Verdict::Fails);
  CHECK(paper.method == method::kAutomataAlgebra);
  CHECK(paper.details["shortest_counterexample"] == "abb");
  CHECK(listed(paper, "abab", "lhs_only"));
  CHECK(paper.hard_invariant_holds);

  const auto single =
      audit_automata_theorem(astar_b_nfa(), bstar_a_nfa(), AssemblyMode::SingleCrossover);
  CHECK(single.verdict == Verdict::HoldsExactly);
  CHECK(single.counterexamples.empty());
}

TEST_CASE("grammar and automata paper constructions agree") {
  const auto [g1, g2] = worked_example_grammars();
  const auto r = audit_grammar_automata_agreement(g1, g2);
  CHECK(r.verdict == Verdict::HoldsExactly);
  for (const auto& p : curated_regular_pairs()) {
    INFO(p.label);
    CHECK(audit_grammar_automata_agreement(*p.a.grammar, *p.b.grammar).verdict ==
          Verdict::HoldsExactly);
  }
}

TEST_CASE("counterexample listing is capped but counted") {
  const auto [g1, g2] = worked_example_grammars();
  AuditConfig c;
  c.max_counterexamples = 2;
  const auto full = audit_grammar_theorem(g1, g2, AssemblyMode::Paper);
  const auto capped = audit_grammar_theorem(g1, g2, AssemblyMode::Paper, c);
  CHECK(capped.counterexamples.size() == 2);
  CHECK(capped.counterexample_total == full.counterexample_total);
  CHECK(full.counterexample_total > 2);
}

TEST_CASE("verdict rules are enforced") {
  AuditReport r;
  r.method = method::kBoundedEnumeration;
  r.bounds.max_len = 5;
  r.verdict = Verdict::HoldsExactly;
  CHECK_THROWS_AS(check_report(r), std::logic_error);
  r.verdict = Verdict::Fails;
  CHECK_THROWS_AS(check_report(r), std::logic_error);
  r.counterexamples.push_back({"ab", "lhs_only", ""});
  r.counterexample_total = 1;
  CHECK_NOTHROW(check_report(r));
  r.verdict = Verdict::HoldsWithinBounds;
  r.counterexamples.clear();
  r.counterexample_total = 0;
  CHECK_NOTHROW(check_report(r));
  r.bounds.max_len.reset();
  CHECK_THROWS_AS(check_report(r), std::logic_error);
  CHECK(is_exact_method(method::kAutomataAlgebra));
  CHECK_FALSE(is_exact_method(method::kBoundedEnumeration));
}

TEST_CASE("report JSON layout") {
  const auto [g1, g2] = worked_example_grammars();
  const auto r = audit_grammar_theorem(g1, g2, AssemblyMode::Paper);
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"claim", "label", "mode", "bounds", "verdict", "witnesses",
                                         "counterexamples", "counterexample_total", "method", "flags",
                                         "hard_invariant_holds", "input_digest", "details",
                                         "elapsed_ms"});
  CHECK(j["claim"] == "THM_GRAMMAR_EQ");
  CHECK(j["verdict"] == "FAILS");
  CHECK(j["mode"] == "paper");
  CHECK(j["bounds"]["seed"].is_null());
  CHECK(j["elapsed_ms"].is_null());
  CHECK(j["counterexamples"][0]["side"] == "lhs_only");
  CHECK(j["input_digest"].get<std::string>().size() == 16);

  AuditConfig timed;
  timed.timing = true;
  CHECK(to_json(audit_grammar_theorem(g1, g2, AssemblyMode::Paper, timed))["elapsed_ms"].is_number());

  const auto text = to_text(r);
  CHECK(text.find("FAILS") != std::string::npos);
  CHECK(text.find("abb") != std::string::npos);
}

TEST_CASE("input digests depend on the inputs only") {
  const auto [g1, g2] = worked_example_grammars();
  const auto a = audit_grammar_theorem(g1, g2, AssemblyMode::Paper);
  const auto b = audit_grammar_theorem(g1, g2, AssemblyMode::SingleCrossover);
  const auto swapped = audit_grammar_theorem(g2, g1, AssemblyMode::Paper);
  CHECK(a.input_digest == b.input_digest);
  CHECK(a.input_digest != swapped.input_digest);
}

TEST_CASE("closures by class") {
  AuditConfig c;
  c.max_len = 7;
  std::vector<SuitePair> pairs = curated_finite_pairs();
  for (auto& p : curated_regular_pairs()) pairs.push_back(p);
  for (auto& p : curated_linear_pairs()) pairs.push_back(p);
  for (auto& p : curated_cf_pairs()) pairs.push_back(p);
  const auto reports = audit_closures(pairs, c);
  REQUIRE(reports.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& r = reports[i];
    INFO(pairs[i].label);
    CHECK(r.hard_invariant_holds);
    CHECK(r.verdict != Verdict::Fails);
    const bool has_flag =
        std::find(r.flags.begin(), r.flags.end(), "UNAUDITED-LIN") != r.flags.end();
    switch (pairs[i].a.cls) {
      case LanguageClass::Fin:
        CHECK(r.claim == ClaimId::ThmFinFin);
        break;
      case LanguageClass::Reg:
        CHECK(r.claim == ClaimId::ClosureReg);
        CHECK(r.details["shape_check"] == true);
        CHECK(r.details["paper_grammar_class"] == "RIGHT_LINEAR");
        break;
      case LanguageClass::Lin:
        CHECK(r.claim == ClaimId::ClosureLin);
        CHECK(has_flag);
        CHECK(r.details["shape_check"] == true);
        break;
      case LanguageClass::Cf:
        CHECK(r.claim == ClaimId::ClosureCf);
        CHECK_FALSE(has_flag);
        CHECK(r.details["single_grammar_class"] == "GNF");
        break;
    }
  }
}

TEST_CASE("suite reports are sorted, consistent and reproducible") {
  AuditConfig c;
  c.max_len = 6;
  const auto first = run_suite(c);
  const auto second = run_suite(c);
  CHECK(dump(suite_index(first, c)) == dump(suite_index(second, c)));
  Json a = Json::array(), b = Json::array();
  for (const auto& r : first) a.push_back(to_json(r));
  for (const auto& r : second) b.push_back(to_json(r));
  CHECK(dump(a) == dump(b));

  auto sorted = first;
  std::reverse(sorted.begin(), sorted.end());
  sort_reports(sorted);
  CHECK(dump(Json(a)) == [&] {
    Json s = Json::array();
    for (const auto& r : sorted) s.push_back(to_json(r));
    return dump(s);
  }());

  std::size_t failures = 0;
  for (const auto& r : first) {
    INFO(to_string(r.claim), " ", r.label, " ", r.mode);
    CHECK_NOTHROW(check_report(r));
    CHECK(r.hard_invariant_holds);
    if (r.verdict == Verdict::HoldsExactly) CHECK(is_exact_method(r.method));
    if (r.verdict == Verdict::Fails) ++failures;
    if (r.mode == "single" &&
        (r.claim == ClaimId::ThmGrammarEq || r.claim == ClaimId::ThmAutomataEq))
      CHECK(r.verdict != Verdict::Fails);
  }
  const auto index = suite_index(first, c);
  CHECK(index["report_count"] == first.size());
  std::size_t tallied = 0;
  for (const auto& [claim, counts] : index["tallies"].items())
    for (const auto& [verdict, n] : counts.items()) tallied += n.get<std::size_t>();
  CHECK(tallied == first.size());
  CHECK(failures > 0);
}
