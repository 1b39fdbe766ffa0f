// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "gsa/audit.hpp"
#include "gsa/dfa.hpp"
#include "gsa/grammar_io.hpp"
#include "gsa/normalize.hpp"
#include "gsa/oracle.hpp"
#include "gsa/report.hpp"
#include "gsa/suite.hpp"
#include "oracles.hpp"

using namespace gsa;

namespace {

// Pinned bounds. Every comparison below is exact; the only slack is the
// word-length bound on bounded checks.
constexpr std::size_t kRandomWordPairs = 1000;
constexpr std::size_t kRandomWordLen = 8;
constexpr std::size_t kRandomAlphabet = 3;
constexpr std::size_t kRandomLanguagePairs = 50;
constexpr std::size_t kGrammarBound = 10;
constexpr std::size_t kGnfBound = 8;
constexpr std::size_t kGnfCorpusMin = 10;
constexpr std::size_t kAllowedDifferences = 0;
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Cli {
  int code = -1;
  std::string out;
};

Cli run_cli(const std::string& args) {
  Cli r;
  FILE* pipe = popen((std::string(GSA_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(GSA_TEST_DATA) + "/" + name; }

AuditConfig default_config() {
  AuditConfig c;
  c.max_len = kGrammarBound;
  c.seed = kSeed;
  return c;
}

Outcome worked_example_productions() {
  const auto [g1, g2] = worked_example_grammars();
  const auto g = assemble_grammars(g1, g2, AssemblyMode::Paper);
  // S1 -> aS1 | b | bS2 | a and S2 -> aS1 | bS2 | a | b; the fresh start
  // carries copies of both so that S -> S1 | S2 needs no unit rules.
  const std::vector<std::string> body{"a S1", "b", "b S2", "a", "a S1", "b S2", "a", "b"};
  std::multiset<std::string> expected;
  for (std::size_t i = 0; i < body.size(); ++i) expected.insert((i < 4 ? "S1 -> " : "S2 -> ") + body[i]);
  std::set<std::string> start_copies;
  for (const auto& b : body) start_copies.insert(g.start() + " -> " + b);
  for (const auto& p : start_copies) expected.insert(p);

  std::multiset<std::string> got;
  for (const auto& p : g.productions()) got.insert(to_string(p));
  Outcome o;
  o.pass = got == expected && g.class_tag() == GrammarClass::RightLinear;
  o.detail = std::to_string(got.size()) + " productions, start " + g.start();
  return o;
}

Outcome single_letter_agreement() {
  SeededRng rng(kSeed);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kRandomWordPairs; ++i) {
    const std::string sigma = std::string("abc").substr(0, rng.between(1, kRandomAlphabet));
    const Word w1 = rng.word(0, kRandomWordLen, sigma), w2 = rng.word(0, kRandomWordLen, sigma);
    const auto literal = oracle::gsa_words(w1, w2);
    const auto all = gsa_pair(w1, w2), single = gsa_pair_single_letter(w1, w2);
    if (all != single || oracle::as_set(all) != literal) ++mismatches;
  }
  return {mismatches == 0, std::to_string(kRandomWordPairs) + " pairs, " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome theorem_one() {
  const auto config = default_config();
  std::size_t hard = 0, equal = 0, unequal = 0;
  for (const auto& p : random_finite_pairs(kSeed, kRandomLanguagePairs)) {
    const auto r = audit_gs_eq_gsa(p.a.words, p.b.words, config);
    hard += !r.hard_invariant_holds;
    (r.verdict == Verdict::HoldsExactly ? equal : unequal)++;
  }
  bool curated = true, ab_ba = false;
  for (const auto& p : curated_finite_pairs()) {
    const auto r = audit_gs_eq_gsa(p.a.words, p.b.words, config);
    curated = curated && r.verdict == Verdict::HoldsExactly && r.hard_invariant_holds;
    ab_ba = ab_ba || (p.a.words == FiniteLanguage{"ab"} && p.b.words == FiniteLanguage{"ba"});
  }
  std::ostringstream d;
  d << kRandomLanguagePairs << " random pairs: GSA subset of GS violated on " << hard
    << ", GS = GSA on " << equal << ", GS-only words on " << unequal
    << "; curated equality " << (curated ? "exact" : "broken");
  return {hard == 0 && curated && ab_ba, d.str()};
}

Outcome part_one_inclusion() {
  const auto config = default_config();
  std::size_t grammar_misses = 0, automaton_misses = 0, pairs = 0;
  for (const auto& p : curated_regular_pairs()) {
    ++pairs;
    const auto r = audit_grammar_theorem(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper, config);
    const bool part1 = r.details["rhs_subset_of_lhs"].get<bool>();
    for (const auto& c : r.counterexamples) grammar_misses += c.side == "rhs_only";
    grammar_misses += !part1 || !r.hard_invariant_holds;
    const auto m1 = p.a.automaton(), m2 = p.b.automaton();
    automaton_misses +=
        inclusion_counterexample(crossover_nfa(m1, m2), assemble_nfas(m1, m2, AssemblyMode::Paper))
            .has_value();
  }
  return {grammar_misses <= kAllowedDifferences && automaton_misses <= kAllowedDifferences,
          std::to_string(pairs) + " regular pairs, grammar misses " + std::to_string(grammar_misses) +
              " (length <= " + std::to_string(kGrammarBound) + "), automaton misses " +
              std::to_string(automaton_misses) + " (exact)"};
}

Outcome multi_crossover_gap() {
  const auto [g1, g2] = worked_example_grammars();
  const auto r = audit_grammar_theorem(g1, g2, AssemblyMode::Paper, default_config());
  const bool abab = std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                                [](const Counterexample& c) { return c.word == "abab" && c.side == "lhs_only"; });
  const bool length_four = std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                                       [](const Counterexample& c) { return c.word.size() == 4; });
  const auto cli = run_cli("audit --g1 " + data("astar_b.gr") + " --g2 " + data("bstar_a.gr"));
  const bool cli_abab = cli.out.find("abab") != std::string::npos;
  std::ostringstream d;
  d << "verdict " << to_string(r.verdict) << ", abab " << (abab ? "listed" : "missing")
    << ", shortest " << (r.counterexamples.empty() ? "-" : r.counterexamples.front().word)
    << ", cli exit " << cli.code;
  return {r.verdict == Verdict::Fails && abab && length_four && cli.code == 2 && cli_abab, d.str()};
}

Outcome single_crossover_exactness() {
  std::size_t nfa_pairs = 0, nfa_bad = 0, grammar_pairs = 0, differences = 0;
  for (const auto& p : curated_regular_pairs()) {
    ++nfa_pairs;
    const auto m1 = p.a.automaton(), m2 = p.b.automaton();
    nfa_bad += !equivalent(assemble_nfas(m1, m2, AssemblyMode::SingleCrossover), crossover_nfa(m1, m2)).equal;
  }
  auto grammars = curated_regular_pairs();
  for (auto& p : curated_linear_pairs()) grammars.push_back(p);
  for (auto& p : curated_cf_pairs()) grammars.push_back(p);
  for (const auto& p : grammars) {
    ++grammar_pairs;
    auto config = default_config();
    if (p.a.cls == LanguageClass::Lin || p.a.cls == LanguageClass::Cf)
      config.parent_depth = context_free_depth(config);
    const auto r =
        audit_grammar_theorem(*p.a.grammar, *p.b.grammar, AssemblyMode::SingleCrossover, config);
    differences += r.counterexample_total + !r.hard_invariant_holds;
  }
  std::ostringstream d;
  d << nfa_pairs << " NFA pairs, " << nfa_bad << " inequivalent; " << grammar_pairs
    << " grammar pairs, " << differences << " differences at length <= " << kGrammarBound;
  return {nfa_bad == 0 && differences <= kAllowedDifferences, d.str()};
}

Outcome grammar_automata_agreement() {
  const auto [g1, g2] = worked_example_grammars();
  const auto r = audit_grammar_automata_agreement(g1, g2, default_config());
  const auto direct =
      equivalent(grammar_to_nfa(assemble_grammars(g1, g2, AssemblyMode::Paper)),
                 assemble_nfas(grammar_to_nfa(g1), grammar_to_nfa(g2), AssemblyMode::Paper));
  return {r.verdict == Verdict::HoldsExactly && direct.equal,
          std::string("verdict ") + to_string(r.verdict) + ", direct check " +
              (direct.equal ? "equivalent" : "differs on " + *direct.witness)};
}

Outcome closure_shapes() {
  bool ok = true;
  std::size_t reg = 0, gnf = 0, fin = 0, lin = 0;
  for (const auto& p : curated_regular_pairs()) {
    const auto g = assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper);
    ok = ok && g.class_tag() == GrammarClass::RightLinear &&
         HeadNormalGrammar::satisfies(g.productions(), GrammarClass::RightLinear);
    ++reg;
  }
  auto nonregular = curated_linear_pairs();
  for (auto& p : curated_cf_pairs()) nonregular.push_back(p);
  for (const auto& p : nonregular)
    for (auto mode : {AssemblyMode::Paper, AssemblyMode::SingleCrossover}) {
      const auto g = assemble_grammars(*p.a.grammar, *p.b.grammar, mode);
      ok = ok && g.class_tag() == GrammarClass::Gnf &&
           HeadNormalGrammar::satisfies(g.productions(), GrammarClass::Gnf);
      ++gnf;
    }
  auto finite = curated_finite_pairs();
  for (auto& p : random_finite_pairs(kSeed, kRandomLanguagePairs)) finite.push_back(p);
  for (const auto& p : finite) {
    const auto r = audit_fin_fin(p.a.words, p.b.words);
    ok = ok && r.verdict == Verdict::HoldsExactly && r.details["cardinality"].is_number_unsigned();
    ++fin;
  }
  for (const auto& r : run_suite(default_config())) {
    const bool is_lin = r.claim == ClaimId::ClosureLin;
    if (!is_lin) continue;
    ok = ok && std::find(r.flags.begin(), r.flags.end(), "UNAUDITED-LIN") != r.flags.end();
    ++lin;
  }
  ok = ok && lin > 0;
  std::ostringstream d;
  d << reg << " right-linear, " << gnf << " GNF, " << fin << " finite, " << lin << " flagged linear";
  return {ok, d.str()};
}

Outcome gnf_soundness() {
  const auto corpus = gnf_corpus();
  std::size_t bad_shape = 0, differences = 0;
  for (const auto& [name, text] : corpus) {
    const auto cfg = parse_grammar(text, name);
    const auto g = cfg_to_gnf(cfg);
    bad_shape += !(g.class_tag() == GrammarClass::Gnf &&
                   HeadNormalGrammar::satisfies(g.productions(), GrammarClass::Gnf));
    const auto got = oracle::as_set(enumerate_grammar(g, kGnfBound));
    const auto want = oracle::cfg_words(cfg, kGnfBound);
    for (const auto& w : got) differences += want.count(w) == 0;
    for (const auto& w : want) differences += got.count(w) == 0;
  }
  return {corpus.size() >= kGnfCorpusMin && bad_shape == 0 && differences <= kAllowedDifferences,
          std::to_string(corpus.size()) + " grammars, " + std::to_string(bad_shape) + " bad shapes, " +
              std::to_string(differences) + " differences at length <= " + std::to_string(kGnfBound)};
}

Outcome determinism() {
  const auto config = default_config();
  auto render = [&] {
    const auto reports = run_suite(config);
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    return dump(suite_index(reports, config)) + dump(all);
  };
  const bool library = render() == render();
  const std::string args = "audit --suite --format json --seed " + std::to_string(kSeed);
  const auto a = run_cli(args), b = run_cli(args);
  const bool cli = a.out == b.out && !a.out.empty();
  return {library && cli, std::string("library ") + (library ? "identical" : "differs") + ", cli " +
                              (cli ? "identical" : "differs") + " (" + std::to_string(a.out.size()) +
                              " bytes)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example production set", worked_example_productions},
      {"all-substrings GSA equals single-letter overlap", single_letter_agreement},
      {"GS versus GSA on finite pairs", theorem_one},
      {"GSA inside the paper-mode assembly", part_one_inclusion},
      {"multi-crossover gap detected", multi_crossover_gap},
      {"single-crossover assembly is exact", single_crossover_exactness},
      {"paper grammar and automaton assemblies agree", grammar_automata_agreement},
      {"closure shapes and flags", closure_shapes},
      {"GNF conversion is sound", gnf_soundness},
      {"byte-identical reruns", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << o.detail << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
