#include "gsa/suite.hpp"

#include <algorithm>

#include "gsa/grammar_io.hpp"
#include "gsa/normalize.hpp"
#include "gsa/oracle.hpp"
#include "gsa/report.hpp"

namespace gsa {

const char* to_string(LanguageClass c) {
  switch (c) {
    case LanguageClass::Fin: return "FIN";
    case LanguageClass::Reg: return "REG";
    case LanguageClass::Lin: return "LIN";
    case LanguageClass::Cf: return "CF";
  }
  return "?";
}

Operand Operand::finite(FiniteLanguage words) {
  Operand o;
  o.cls = LanguageClass::Fin;
  o.words = std::move(words);
  return o;
}

Operand Operand::from_grammar(LanguageClass cls, std::string_view text) {
  Operand o;
  o.cls = cls;
  o.grammar = to_head_normal(parse_grammar(text, "<suite>"));
  return o;
}

Nfa Operand::automaton() const {
  if (!grammar) return nfa_from_words(words);
  return grammar_to_nfa(*grammar);
}

namespace {

SuitePair grammar_pair(std::string label, LanguageClass cls, std::string_view a,
                       std::string_view b) {
  return {std::move(label), Operand::from_grammar(cls, a), Operand::from_grammar(cls, b)};
}

SuitePair finite_pair(std::string label, FiniteLanguage a, FiniteLanguage b) {
  return {std::move(label), Operand::finite(std::move(a)), Operand::finite(std::move(b))};
}

constexpr std::string_view kAStarB = "start: S1\nS1 -> a S1\nS1 -> b\n";
constexpr std::string_view kBStarA = "start: S2\nS2 -> b S2\nS2 -> a\n";

constexpr std::string_view kAnCBn = "start: S\nS -> c\nS -> a S B\nB -> b\n";
constexpr std::string_view kBnCAn = "start: T\nT -> c\nT -> b T A\nA -> a\n";

}  // namespace

std::pair<HeadNormalGrammar, HeadNormalGrammar> worked_example_grammars() {
  return {*as_head_normal(parse_grammar(kAStarB)), *as_head_normal(parse_grammar(kBStarA))};
}

std::vector<SuitePair> curated_finite_pairs() {
  return {
      finite_pair("ab/ba", {"ab"}, {"ba"}),
      finite_pair("empty/empty", {}, {}),
      finite_pair("empty/ab", {}, {"ab"}),
      finite_pair("aab/bba", {"aab"}, {"bba"}),
      finite_pair("abc/cba", {"abc"}, {"cba"}),
      finite_pair("a/a", {"a"}, {"a"}),
  };
}

std::vector<SuitePair> curated_regular_pairs() {
  return {
      grammar_pair("a*b/b*a", LanguageClass::Reg, kAStarB, kBStarA),
      grammar_pair("a/a", LanguageClass::Reg, "start: S1\nS1 -> a\n", "start: S2\nS2 -> a\n"),
      grammar_pair("a+/b+", LanguageClass::Reg, "start: S1\nS1 -> a S1\nS1 -> a\n",
                   "start: S2\nS2 -> b S2\nS2 -> b\n"),
      grammar_pair("(aa)*b/ab*c", LanguageClass::Reg, "start: S1\nS1 -> a A\nS1 -> b\nA -> a S1\n",
                   "start: S2\nS2 -> a B\nB -> b B\nB -> c\n"),
      grammar_pair("(ab)+/(ba)+", LanguageClass::Reg, "start: S1\nS1 -> a B1\nB1 -> b\nB1 -> b S1\n",
                   "start: S2\nS2 -> b A2\nA2 -> a\nA2 -> a S2\n"),
      grammar_pair("a(b|c)*/c*ba", LanguageClass::Reg,
                   "start: S1\nS1 -> a\nS1 -> a R\nR -> b\nR -> c\nR -> b R\nR -> c R\n",
                   "start: S2\nS2 -> c S2\nS2 -> b A\nA -> a\n"),
  };
}

std::vector<SuitePair> curated_linear_pairs() {
  return {
      grammar_pair("a^n c b^n/b^n c a^n", LanguageClass::Lin, kAnCBn, kBnCAn),
      grammar_pair("w c w^R/a^n c b^n", LanguageClass::Lin,
                   "start: P\nP -> c\nP -> a P a\nP -> b P b\n", kAnCBn),
  };
}

std::vector<SuitePair> curated_cf_pairs() {
  return {
      grammar_pair("a^n b^n/b^n a^n", LanguageClass::Cf, "start: S\nS -> a S b\nS -> a b\n",
                   "start: T\nT -> b T a\nT -> b a\n"),
      grammar_pair("dyck/b^n a^n", LanguageClass::Cf, "start: D\nD -> a D b\nD -> a b\nD -> D D\n",
                   "start: T\nT -> b T a\nT -> b a\n"),
  };
}

std::vector<SuitePair> random_finite_pairs(std::uint64_t seed, std::size_t count,
                                           std::size_t max_words, std::size_t max_word_len,
                                           std::size_t max_symbols) {
  SeededRng rng(seed);
  std::vector<SuitePair> out;
  auto language = [&](std::string_view alphabet) {
    FiniteLanguage l;
    const std::size_t n = rng.between(1, max_words);
    for (std::size_t i = 0; i < n; ++i) l.insert(rng.word(1, max_word_len, alphabet));
    return l;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const std::string alphabet = std::string("abc").substr(0, rng.between(1, max_symbols));
    auto a = language(alphabet);
    auto b = language(alphabet);
    out.push_back(finite_pair("random-" + std::to_string(i), std::move(a), std::move(b)));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> gnf_corpus() {
  return {
      {"left-recursive S -> S a | b", "start: S\nS -> S a\nS -> b\n"},
      {"a^n b^n", "start: S\nS -> a S b\nS -> a b\n"},
      {"dyck", "start: S\nS -> a S b\nS -> a b\nS -> S S\n"},
      {"expressions", "start: E\nE -> E + T\nE -> T\nT -> T * F\nT -> F\nF -> ( E )\nF -> x\n"},
      {"palindromes", "start: P\nP -> a P a\nP -> b P b\nP -> a\nP -> b\nP -> a a\nP -> b b\n"},
      {"indirect left recursion",
       "start: A\nA -> B a\nA -> c\nB -> A b\nB -> d\n"},
      {"unit chain", "start: S\nS -> A\nA -> B\nB -> a B\nB -> b\n"},
      {"mixed terminals", "start: S\nS -> A b A\nA -> a\nA -> A a\n"},
      {"right-linear words", "start: S\nS -> a b S\nS -> c\n"},
      {"equal a and b", "start: S\nS -> a B\nS -> b A\nA -> a\nA -> a S\nA -> b A A\nB -> b\nB -> b S\nB -> a B B\n"},
      {"nested left recursion", "start: S\nS -> S S a\nS -> S b\nS -> c\n"},
      {"useless symbols", "start: S\nS -> a S\nS -> b\nS -> U\nU -> a U\nV -> c\n"},
  };
}

std::size_t context_free_depth(const AuditConfig& config) {
  return std::max(config.resolved_parent_depth(), 2 * config.max_len + 2);
}

namespace {

bool is_regular_class(LanguageClass c) { return c == LanguageClass::Fin || c == LanguageClass::Reg; }

AuditReport closure_regular(const SuitePair& p, const AuditConfig& config) {
  AuditReport r = audit_automata_theorem(p.a.automaton(), p.b.automaton(),
                                         AssemblyMode::SingleCrossover, config);
  r.claim = ClaimId::ClosureReg;
  r.label = p.label;
  r.details["classes"] = std::string(to_string(p.a.cls)) + "x" + to_string(p.b.cls);
  r.details["statement"] = "single-crossover automaton assembly is an NFA equal to crossover_nfa";
  if (p.a.grammar && p.b.grammar) {
    const auto paper = assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper,
                                         config.parents);
    const bool shape = paper.class_tag() == GrammarClass::RightLinear &&
                       HeadNormalGrammar::satisfies(paper.productions(), GrammarClass::RightLinear);
    r.details["paper_grammar_class"] = to_string(paper.class_tag());
    r.details["shape_check"] = shape;
    r.hard_invariant_holds = r.hard_invariant_holds && shape;
  }
  return r;
}

AuditReport closure_context_free(const SuitePair& p, const AuditConfig& config) {
  AuditConfig deep = config;
  deep.parent_depth = context_free_depth(config);
  AuditReport r =
      audit_grammar_theorem(*p.a.grammar, *p.b.grammar, AssemblyMode::SingleCrossover, deep);
  const bool lin = p.a.cls == LanguageClass::Lin && p.b.cls == LanguageClass::Lin;
  r.claim = lin ? ClaimId::ClosureLin : ClaimId::ClosureCf;
  r.label = p.label;
  if (lin) r.flags.push_back("UNAUDITED-LIN");

  const auto single = assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::SingleCrossover,
                                        config.parents);
  const auto paper =
      assemble_grammars(*p.a.grammar, *p.b.grammar, AssemblyMode::Paper, config.parents);
  const bool shape = HeadNormalGrammar::satisfies(single.productions(), GrammarClass::Gnf) &&
                     HeadNormalGrammar::satisfies(paper.productions(), GrammarClass::Gnf);
  r.details["classes"] = std::string(to_string(p.a.cls)) + "x" + to_string(p.b.cls);
  r.details["statement"] = lin ? "linear pair certified through the GNF path only"
                               : "single-crossover grammar assembly is GNF and matches the oracle";
  r.details["single_grammar_class"] = to_string(single.class_tag());
  r.details["paper_grammar_class"] = to_string(paper.class_tag());
  r.details["shape_check"] = shape;
  r.hard_invariant_holds = r.hard_invariant_holds && shape;
  return r;
}

}  // namespace

std::vector<AuditReport> audit_closures(const std::vector<SuitePair>& suite,
                                        const AuditConfig& config) {
  std::vector<AuditReport> out;
  for (const auto& p : suite) {
    AuditReport r;
    if (p.a.cls == LanguageClass::Fin && p.b.cls == LanguageClass::Fin) {
      r = audit_fin_fin(p.a.words, p.b.words, config);
      r.label = p.label;
    } else if (is_regular_class(p.a.cls) && is_regular_class(p.b.cls)) {
      r = closure_regular(p, config);
    } else {
      if (!p.a.grammar || !p.b.grammar)
        throw std::invalid_argument("closure pair '" + p.label + "' mixes finite and non-regular operands");
      r = closure_context_free(p, config);
    }
    check_report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AuditReport> run_suite(const AuditConfig& config) {
  std::vector<AuditReport> out;
  auto keep = [&](AuditReport r, const std::string& label) {
    r.label = label;
    check_report(r);
    out.push_back(std::move(r));
  };

  const auto finite = curated_finite_pairs();
  const auto randomized = random_finite_pairs(config.seed);
  for (const auto& p : finite) keep(audit_gs_eq_gsa(p.a.words, p.b.words, config), p.label);
  for (const auto& p : randomized) {
    auto r = audit_gs_eq_gsa(p.a.words, p.b.words, config);
    r.bounds.seed = config.seed;
    keep(std::move(r), p.label);
  }

  const auto regular = curated_regular_pairs();
  for (const auto& p : regular) {
    for (auto mode : {AssemblyMode::Paper, AssemblyMode::SingleCrossover}) {
      keep(audit_grammar_theorem(*p.a.grammar, *p.b.grammar, mode, config), p.label);
      keep(audit_automata_theorem(p.a.automaton(), p.b.automaton(), mode, config), p.label);
    }
    keep(audit_grammar_automata_agreement(*p.a.grammar, *p.b.grammar, config), p.label);
  }

  AuditConfig deep = config;
  deep.parent_depth = context_free_depth(config);
  std::vector<SuitePair> nonregular = curated_linear_pairs();
  for (auto& p : curated_cf_pairs()) nonregular.push_back(std::move(p));
  for (const auto& p : nonregular)
    for (auto mode : {AssemblyMode::Paper, AssemblyMode::SingleCrossover}) {
      auto r = audit_grammar_theorem(*p.a.grammar, *p.b.grammar, mode, deep);
      if (p.a.cls == LanguageClass::Lin) r.flags.push_back("UNAUDITED-LIN");
      keep(std::move(r), p.label);
    }

  std::vector<SuitePair> closures = finite;
  closures.push_back({"ab,ba/a*b", Operand::finite({"ab", "ba"}), regular.front().a});
  for (const auto& p : regular) closures.push_back(p);
  for (const auto& p : nonregular) closures.push_back(p);
  for (auto& r : audit_closures(closures, config)) out.push_back(std::move(r));

  sort_reports(out);
  return out;
}

}  // namespace gsa
