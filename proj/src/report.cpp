#include "gsa/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace gsa {

namespace {

Json optional_json(const auto& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const AuditConfig& c) {
  return Json{{"max_len", c.max_len},
              {"parent_depth", c.resolved_parent_depth()},
              {"seed", c.seed},
              {"parents", c.parents == ParentInclusion::Always ? "always" : "shared"},
              {"max_counterexamples", c.max_counterexamples},
              {"timing", c.timing}};
}

Json to_json(const AuditReport& r) {
  Json j;
  j["claim"] = to_string(r.claim);
  j["label"] = r.label;
  j["mode"] = r.mode;
  j["bounds"] = {{"max_len", optional_json(r.bounds.max_len)},
                 {"parent_depth", optional_json(r.bounds.parent_depth)},
                 {"seed", optional_json(r.bounds.seed)}};
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  auto ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"word", c.word}, {"side", c.side}, {"trace", c.trace}});
  j["counterexamples"] = std::move(ces);
  j["counterexample_total"] = r.counterexample_total;
  j["method"] = r.method;
  j["flags"] = r.flags;
  j["hard_invariant_holds"] = r.hard_invariant_holds;
  j["input_digest"] = r.input_digest;
  j["details"] = r.details;
  j["elapsed_ms"] = optional_json(r.elapsed_ms);
  return j;
}

std::string to_text(const AuditReport& r) {
  std::ostringstream os;
  os << to_string(r.claim) << " [" << r.mode << "] " << r.label << ": " << to_string(r.verdict)
     << " (method " << r.method;
  if (r.bounds.max_len) os << ", max_len " << *r.bounds.max_len;
  if (r.bounds.parent_depth) os << ", parent_depth " << *r.bounds.parent_depth;
  if (r.bounds.seed) os << ", seed " << *r.bounds.seed;
  os << ")\n";
  for (const auto& f : r.flags) os << "  flag: " << f << '\n';
  if (!r.hard_invariant_holds) os << "  HARD INVARIANT VIOLATED\n";
  if (!r.counterexamples.empty()) {
    os << "  counterexamples (" << r.counterexample_total << " total):\n";
    std::size_t shown = 0;
    for (const auto& c : r.counterexamples) {
      if (shown++ == 8) {
        os << "    ...\n";
        break;
      }
      os << "    " << display_word(c.word) << "  " << c.side << "  " << c.trace << '\n';
    }
  }
  if (r.elapsed_ms) os << "  elapsed_ms: " << *r.elapsed_ms << '\n';
  return os.str();
}

void sort_reports(std::vector<AuditReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const AuditReport& a, const AuditReport& b) {
    return std::tie(a.claim, a.input_digest, a.label, a.mode) <
           std::tie(b.claim, b.input_digest, b.label, b.mode);
  });
}

Json suite_index(const std::vector<AuditReport>& reports, const AuditConfig& config) {
  Json tallies = Json::object();
  for (const auto& r : reports) {
    auto& t = tallies[to_string(r.claim)];
    if (t.is_null())
      t = {{"HOLDS_EXACTLY", 0}, {"HOLDS_WITHIN_BOUNDS", 0}, {"FAILS", 0}};
    t[to_string(r.verdict)] = t[to_string(r.verdict)].get<int>() + 1;
  }
  auto entries = Json::array();
  bool hard_ok = true;
  for (const auto& r : reports) {
    hard_ok = hard_ok && r.hard_invariant_holds;
    entries.push_back({{"claim", to_string(r.claim)},
                       {"label", r.label},
                       {"mode", r.mode},
                       {"verdict", to_string(r.verdict)},
                       {"input_digest", r.input_digest}});
  }
  return Json{{"config", to_json(config)},
              {"report_count", reports.size()},
              {"hard_invariants_hold", hard_ok},
              {"tallies", std::move(tallies)},
              {"reports", std::move(entries)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gsa
