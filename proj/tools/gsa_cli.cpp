// Command-line front end for the self-assembly toolkit.
//
// Exit status: 0 success, 1 usage or parse error, 2 an audit reported FAILS
// or a violated hard invariant.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsa/audit.hpp"
#include "gsa/grammar_io.hpp"
#include "gsa/normalize.hpp"
#include "gsa/nfa_io.hpp"
#include "gsa/report.hpp"
#include "gsa/suite.hpp"
#include "gsa/word_io.hpp"

namespace {

using gsa::Json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kClaimFails = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string mode = "paper";
  std::uint64_t seed = 0;
  std::size_t max_len = 10;
  std::optional<std::size_t> parent_depth;
  std::string output;
  std::string parents = "shared";
  bool timing = false;

  std::vector<std::string> inputs;
  std::vector<std::string> rules;
  std::string g1, g2, m1, m2, l1, l2;
  bool suite = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--mode", o.mode, "Assembly mode")
      ->check(CLI::IsMember({"paper", "single"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for randomized audits")->capture_default_str();
  cmd->add_option("--max-len", o.max_len, "Word length bound")->capture_default_str();
  cmd->add_option("--parent-depth", o.parent_depth, "Parent enumeration depth (default max-len + 4)");
  cmd->add_option("-o,--output", o.output, "Write to this path instead of standard output");
  cmd->add_option("--parents", o.parents, "When parents join a self-assembly result")
      ->check(CLI::IsMember({"shared", "always"}))
      ->capture_default_str();
  cmd->add_flag("--timing", o.timing, "Record elapsed_ms in reports");
}

gsa::AuditConfig audit_config(const Options& o) {
  gsa::AuditConfig c;
  c.max_len = o.max_len;
  c.parent_depth = o.parent_depth;
  c.seed = o.seed;
  c.parents = o.parents == "always" ? gsa::ParentInclusion::Always : gsa::ParentInclusion::SharedSymbol;
  c.timing = o.timing;
  return c;
}

void check_bounds(const Options& o, bool need_positive_len) {
  if (need_positive_len && o.max_len < 1) throw UsageError("--max-len must be at least 1");
  if (o.parent_depth && *o.parent_depth < o.max_len)
    throw UsageError("--parent-depth (" + std::to_string(*o.parent_depth) +
                     ") must be at least --max-len (" + std::to_string(o.max_len) + ")");
}

Json config_json(const std::string& command, const Options& o) {
  const auto c = audit_config(o);
  Json inputs = Json::array();
  for (const auto& p : o.inputs) inputs.push_back({{"path", p}, {"digest", gsa::content_digest(gsa::read_file(p))}});
  for (const auto* p : {&o.g1, &o.g2, &o.m1, &o.m2, &o.l1, &o.l2})
    if (!p->empty()) inputs.push_back({{"path", *p}, {"digest", gsa::content_digest(gsa::read_file(*p))}});
  Json j{{"command", command},
         {"inputs", std::move(inputs)},
         {"mode", o.mode},
         {"max_len", c.max_len},
         {"parent_depth", c.resolved_parent_depth()},
         {"seed", c.seed},
         {"parents", o.parents},
         {"format", o.format},
         {"output", o.output.empty() ? Json(nullptr) : Json(o.output)},
         {"timing", o.timing}};
  if (!o.rules.empty()) j["rules"] = o.rules;
  return j;
}

// Config echo as comment lines, so text outputs stay parseable.
std::string config_comment(const Json& config) {
  std::string out;
  for (const auto& [k, v] : config.items()) out += "# " + k + ": " + v.dump() + "\n";
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

gsa::FiniteLanguage load_words(const std::string& path) {
  return gsa::parse_word_list(gsa::read_file(path), path);
}

gsa::HeadNormalGrammar load_grammar(const std::string& path) {
  const auto cfg = gsa::parse_grammar(gsa::read_file(path), path);
  try {
    return gsa::to_head_normal(cfg);
  } catch (const gsa::GrammarError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

gsa::Nfa load_nfa(const std::string& path) { return gsa::parse_nfa(gsa::read_file(path), path); }

bool looks_like_nfa(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    return line.substr(first).starts_with("states:");
  }
  return false;
}

std::string words_output(const std::string& command, const Options& o, const gsa::FiniteLanguage& l) {
  const Json config = config_json(command, o);
  if (o.format == "json") {
    Json words = Json::array();
    for (const auto& w : l) words.push_back(w);
    return gsa::dump(Json{{"config", config}, {"count", l.size()}, {"words", std::move(words)}});
  }
  return config_comment(config) + gsa::format_word_list(l);
}

std::string grammar_output(const std::string& command, const Options& o,
                           const gsa::HeadNormalGrammar& g) {
  const Json config = config_json(command, o);
  if (o.format == "json") {
    Json prods = Json::array();
    for (const auto& p : g.productions()) prods.push_back(gsa::to_string(p));
    return gsa::dump(Json{{"config", config},
                          {"start", g.start()},
                          {"class", gsa::to_string(g.class_tag())},
                          {"notes", g.notes},
                          {"productions", std::move(prods)}});
  }
  return config_comment(config) + gsa::format_grammar(g);
}

int run_gsa(const Options& o) {
  const auto l = gsa::gsa_finite(load_words(o.inputs.at(0)), load_words(o.inputs.at(1)),
                                 audit_config(o).parents);
  emit(o, words_output("gsa", o, l));
  return kOk;
}

int run_splice(const Options& o) {
  const auto l1 = load_words(o.inputs.at(0));
  const auto l2 = load_words(o.inputs.at(1));
  gsa::RuleSet rules;
  if (o.rules.empty()) {
    rules = gsa::canonical_rules(l1, l2);
  } else {
    for (const auto& r : o.rules) {
      try {
        rules.insert(gsa::SplicingRule::parse(r));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--rule: ") + e.what());
      }
    }
  }
  emit(o, words_output("splice", o, gsa::gs_finite(l1, l2, rules)));
  return kOk;
}

int run_assemble_grammar(const Options& o) {
  const auto g = gsa::assemble_grammars(load_grammar(o.inputs.at(0)), load_grammar(o.inputs.at(1)),
                                        gsa::parse_mode(o.mode), audit_config(o).parents);
  emit(o, grammar_output("assemble-grammar", o, g));
  return kOk;
}

int run_assemble_nfa(const Options& o) {
  const auto m = gsa::assemble_nfas(load_nfa(o.inputs.at(0)), load_nfa(o.inputs.at(1)),
                                    gsa::parse_mode(o.mode), audit_config(o).parents);
  const Json config = config_json("assemble-nfa", o);
  if (o.format == "json")
    emit(o, gsa::dump(Json{{"config", config}, {"states", m.size()}, {"nfa", gsa::format_nfa(m)}}));
  else
    emit(o, config_comment(config) + gsa::format_nfa(m));
  return kOk;
}

int run_enumerate(const Options& o) {
  const auto& path = o.inputs.at(0);
  const auto text = gsa::read_file(path);
  const auto l = looks_like_nfa(text) ? gsa::enumerate_nfa(gsa::parse_nfa(text, path), o.max_len)
                                      : gsa::enumerate_grammar(load_grammar(path), o.max_len);
  emit(o, words_output("enumerate", o, l));
  return kOk;
}

int run_gnf(const Options& o) {
  const auto& path = o.inputs.at(0);
  const auto cfg = gsa::parse_grammar(gsa::read_file(path), path);
  gsa::HeadNormalGrammar g;
  try {
    g = gsa::cfg_to_gnf(cfg);
  } catch (const gsa::GrammarError& e) {
    throw UsageError(path + ": " + e.what());
  }
  emit(o, grammar_output("gnf", o, g));
  return kOk;
}

int run_audit(const Options& o) {
  check_bounds(o, true);
  const auto config = audit_config(o);
  const auto mode = gsa::parse_mode(o.mode);
  auto both = [](const std::string& a, const std::string& b, const char* name) {
    if (a.empty() != b.empty())
      throw UsageError(std::string("--") + name + "1 and --" + name + "2 must be given together");
    return !a.empty();
  };
  const bool grammars = both(o.g1, o.g2, "g");
  const bool machines = both(o.m1, o.m2, "m");
  const bool languages = both(o.l1, o.l2, "l");
  if (!grammars && !machines && !languages && !o.suite)
    throw UsageError("audit needs --g1/--g2, --m1/--m2, --l1/--l2 or --suite");

  std::vector<gsa::AuditReport> reports;
  auto keep = [&](gsa::AuditReport r, std::string label) {
    r.label = std::move(label);
    gsa::check_report(r);
    reports.push_back(std::move(r));
  };
  if (languages) {
    const auto a = load_words(o.l1), b = load_words(o.l2);
    keep(gsa::audit_gs_eq_gsa(a, b, config), o.l1 + " / " + o.l2);
    keep(gsa::audit_fin_fin(a, b, config), o.l1 + " / " + o.l2);
  }
  if (grammars) {
    const auto a = load_grammar(o.g1), b = load_grammar(o.g2);
    keep(gsa::audit_grammar_theorem(a, b, mode, config), o.g1 + " / " + o.g2);
    const bool regular =
        gsa::HeadNormalGrammar::satisfies(a.productions(), gsa::GrammarClass::RightLinear) &&
        gsa::HeadNormalGrammar::satisfies(b.productions(), gsa::GrammarClass::RightLinear);
    if (regular && mode == gsa::AssemblyMode::Paper)
      keep(gsa::audit_grammar_automata_agreement(a, b, config), o.g1 + " / " + o.g2);
  }
  if (machines)
    keep(gsa::audit_automata_theorem(load_nfa(o.m1), load_nfa(o.m2), mode, config),
         o.m1 + " / " + o.m2);
  if (o.suite)
    for (auto& r : gsa::run_suite(config)) reports.push_back(std::move(r));
  gsa::sort_reports(reports);

  bool failed = false;
  for (const auto& r : reports)
    failed = failed || r.verdict == gsa::Verdict::Fails || !r.hard_invariant_holds;

  const Json echo = config_json("audit", o);
  if (o.format == "json") {
    Json docs = Json::array();
    for (const auto& r : reports) docs.push_back(gsa::to_json(r));
    Json out{{"config", echo}};
    if (o.suite) out["index"] = gsa::suite_index(reports, config);
    out["reports"] = std::move(docs);
    emit(o, gsa::dump(out));
  } else {
    std::string text = config_comment(echo);
    for (const auto& r : reports) text += gsa::to_text(r);
    emit(o, text);
  }
  return failed ? kClaimFails : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized splicing and self-assembly of words, grammars and automata"};
  app.require_subcommand(1);
  Options o;

  auto* gsa_cmd = app.add_subcommand("gsa", "Self-assembly of two word-list files");
  gsa_cmd->add_option("l1", o.inputs, "Word lists")->required()->expected(2);

  auto* splice_cmd = app.add_subcommand("splice", "Generalized splicing of two word-list files");
  splice_cmd->add_option("l1", o.inputs, "Word lists")->required()->expected(2);
  splice_cmd->add_option("--rule", o.rules, "Rule alpha#beta$alpha2#beta2 (default: canonical rules)");

  auto* ag_cmd = app.add_subcommand("assemble-grammar", "Assemble two grammar files");
  ag_cmd->add_option("grammars", o.inputs, "Grammar files")->required()->expected(2);

  auto* an_cmd = app.add_subcommand("assemble-nfa", "Assemble two NFA files");
  an_cmd->add_option("nfas", o.inputs, "NFA files")->required()->expected(2);

  auto* en_cmd = app.add_subcommand("enumerate", "List the words of a grammar or NFA up to --max-len");
  en_cmd->add_option("input", o.inputs, "Grammar or NFA file")->required()->expected(1);

  auto* gnf_cmd = app.add_subcommand("gnf", "Convert an epsilon-free context-free grammar to GNF");
  gnf_cmd->add_option("input", o.inputs, "Grammar file")->required()->expected(1);

  auto* audit_cmd = app.add_subcommand("audit", "Audit the self-assembly claims");
  audit_cmd->add_option("--g1", o.g1, "First grammar");
  audit_cmd->add_option("--g2", o.g2, "Second grammar");
  audit_cmd->add_option("--m1", o.m1, "First NFA");
  audit_cmd->add_option("--m2", o.m2, "Second NFA");
  audit_cmd->add_option("--l1", o.l1, "First word list");
  audit_cmd->add_option("--l2", o.l2, "Second word list");
  audit_cmd->add_flag("--suite", o.suite, "Run the curated and randomized suites");

  for (auto* cmd : {gsa_cmd, splice_cmd, ag_cmd, an_cmd, en_cmd, gnf_cmd, audit_cmd})
    add_common(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!audit_cmd->parsed()) check_bounds(o, false);
    if (gsa_cmd->parsed()) return run_gsa(o);
    if (splice_cmd->parsed()) return run_splice(o);
    if (ag_cmd->parsed()) return run_assemble_grammar(o);
    if (an_cmd->parsed()) return run_assemble_nfa(o);
    if (en_cmd->parsed()) return run_enumerate(o);
    if (gnf_cmd->parsed()) return run_gnf(o);
    return run_audit(o);
  } catch (const std::exception& e) {
    // Parse errors already carry file:line:column.
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
