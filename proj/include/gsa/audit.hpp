// Mechanical audits of the language-equality claims behind the assembly
// constructions. Each audit compares a construction against an independent
// oracle and records the bounds, witnesses and counterexamples it used.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsa/core.hpp"
#include "gsa/dfa.hpp"
#include "gsa/grammar.hpp"
#include "gsa/grammar_assembly.hpp"
#include "gsa/nfa.hpp"

namespace gsa {

enum class ClaimId {
  Thm1GsEqGsa,
  ThmFinFin,
  ThmGrammarEq,
  ThmAutomataEq,
  ObsGrammarAutomataAgree,
  ClosureReg,
  ClosureLin,
  ClosureCf,
};

const char* to_string(ClaimId c);

enum class Verdict { HoldsWithinBounds, HoldsExactly, Fails };

const char* to_string(Verdict v);

/// Oracle identifiers. Exact methods decide the claim outright; bounded ones
/// only compare length-bounded slices.
namespace method {
inline constexpr const char* kFiniteExhaustive = "finite-exhaustive";
inline constexpr const char* kAutomataAlgebra = "automata-algebra";
inline constexpr const char* kBoundedEnumeration = "bounded-enumeration";
}  // namespace method

bool is_exact_method(const std::string& m);

struct Bounds {
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> parent_depth;
  std::optional<std::uint64_t> seed;
};

struct Counterexample {
  Word word;
  /// Which side of the claimed equality contains the word, "lhs_only" or "rhs_only".
  std::string side;
  std::string trace;
};

struct AuditReport {
  ClaimId claim = ClaimId::Thm1GsEqGsa;
  std::string label;
  std::string mode;
  Bounds bounds;
  Verdict verdict = Verdict::HoldsWithinBounds;
  std::vector<Word> witnesses;
  std::vector<Counterexample> counterexamples;
  std::size_t counterexample_total = 0;
  std::string method;
  std::vector<std::string> flags;
  /// Claim-specific facts: side descriptions, set sizes, hard-invariant
  /// outcomes, shape checks.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string input_digest;
  std::optional<double> elapsed_ms;

  /// Recorded outcome of the hard invariant attached to this claim, if any.
  bool hard_invariant_holds = true;
};

struct AuditConfig {
  std::size_t max_len = 10;
  /// Defaults to max_len + 4.
  std::optional<std::size_t> parent_depth;
  std::uint64_t seed = 0;
  ParentInclusion parents = ParentInclusion::SharedSymbol;
  /// Counterexamples listed per report; the total is always reported.
  std::size_t max_counterexamples = 64;
  std::size_t max_witnesses = 16;
  /// Record wall-clock time. Off by default so reports are byte-reproducible.
  bool timing = false;

  std::size_t resolved_parent_depth() const { return parent_depth.value_or(max_len + 4); }
};

/// GS(L1, L2, canonical rules) against GSA(L1, L2). GSA ⊆ GS is a hard
/// invariant; GS ⊆ GSA is the audited direction.
AuditReport audit_gs_eq_gsa(const FiniteLanguage& l1, const FiniteLanguage& l2,
                            const AuditConfig& config = {});

/// GSA(L1, L2) is finite and computed exhaustively.
AuditReport audit_fin_fin(const FiniteLanguage& l1, const FiniteLanguage& l2,
                          const AuditConfig& config = {});

/// L(assemble_grammars(g1, g2, mode)) against the bounded oracle, up to
/// config.max_len. For right-linear inputs the oracle is cross-checked against
/// crossover_nfa.
AuditReport audit_grammar_theorem(const HeadNormalGrammar& g1, const HeadNormalGrammar& g2,
                                  AssemblyMode mode, const AuditConfig& config = {});

/// Exact comparison of L(assemble_nfas(m1, m2, mode)) with crossover_nfa.
/// crossover ⊆ assembled is recorded as the hard invariant.
AuditReport audit_automata_theorem(const Nfa& m1, const Nfa& m2, AssemblyMode mode,
                                   const AuditConfig& config = {});

/// Paper-mode grammar assembly against paper-mode automaton assembly of the
/// converted grammars, exactly.
AuditReport audit_grammar_automata_agreement(const HeadNormalGrammar& g1,
                                             const HeadNormalGrammar& g2,
                                             const AuditConfig& config = {});

/// Applies the verdict rules: FAILS needs a counterexample, HOLDS_EXACTLY
/// needs an exact method. Throws std::logic_error on violation.
void check_report(const AuditReport& r);

}  // namespace gsa
