#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "powerhg/families.hpp"

namespace powerhg {

// Outcome of comparing a claimed equivalence against computed values. The
// two refutation directions are kept apart: the known counterexamples all
// have the equality without the membership; the other direction would point
// at a different defect entirely.
enum class TheoremVerdict {
  kNotApplicable,
  kHolds,
  kRefutedEqualityWithoutMembership,
  kRefutedMembershipWithoutEquality,
};

bool is_refuted(TheoremVerdict v);
std::string to_string(TheoremVerdict v);

struct Prop2Verdict {
  bool nu_eq = false;
  bool tau_eq = false;
  bool gamma_eq = false;
  bool pass() const { return nu_eq && tau_eq && gamma_eq; }
};

struct AuditOptions {
  SolverLimits limits{};
  const Catalog* catalog = nullptr;
  // Fill hypergraph invariants from the base graph via the blow-up
  // identities instead of solving the blow-up directly. Only for quick
  // scouting; verification entry points refuse it, and records carry the
  // mode label.
  bool fast_prop2_shortcut = false;
};

// Everything the auditor derives for one (graph, k, s) triple. Hypergraph
// invariants are measured by the hypergraph solvers on the blow-up itself
// (except in fast mode); verdicts are deterministic functions of the
// invariant and family fields.
struct AuditRecord {
  std::string graph6;
  int k = 0;
  int s = 0;
  int base_order = 0;
  int base_size = 0;
  int hyper_order = 0;

  InvariantCertificate base_gamma, base_nu, base_tau;
  InvariantCertificate hyper_gamma, hyper_nu, hyper_tau;

  bool base_bipartite = false;
  FamilyVerdict family;

  Prop2Verdict prop2;
  bool bounds_ok = false;
  TheoremVerdict thm2 = TheoremVerdict::kNotApplicable;
  TheoremVerdict thm3 = TheoremVerdict::kNotApplicable;
  bool corrected_ok = false;

  bool fast_mode = false;
  bool complete = false;
  std::vector<std::string> errors;

  bool any_check_failed() const {
    return complete && (!prop2.pass() || !bounds_ok || !corrected_ok);
  }
  bool any_theorem_refuted() const {
    return complete && (is_refuted(thm2) || is_refuted(thm3));
  }
};

AuditRecord audit_graph(const Graph& g, int k, int s, const AuditOptions& options = {});

// JSON-lines record (single line, stable key order) and CSV summary row.
std::string to_jsonl(const AuditRecord& r);
std::string audit_csv_header();
std::string to_csv_row(const AuditRecord& r);

struct KS {
  int k = 0;
  int s = 0;
};

struct HuntStats {
  long long audited = 0;
  long long emitted = 0;
  long long skipped = 0;  // capacity/parameter/resource problems, logged
};

using RecordSink = std::function<void(const AuditRecord&)>;
using Diagnostic = std::function<void(const std::string&)>;

// Audits corpus x params and emits only the interesting records: a refuted
// equivalence verdict, or a failed identity / bounds / corrected check (the
// latter are labeled implementation bugs by the caller). Records are emitted
// in corpus order regardless of worker count.
HuntStats hunt_counterexamples(const std::vector<Graph>& corpus, const std::vector<KS>& params,
                               const RecordSink& sink, const AuditOptions& options = {},
                               int jobs = 1, const Diagnostic& diag = {});

struct Prop2Summary {
  long long instances = 0;
  long long nu_pass = 0;
  long long tau_pass = 0;
  long long gamma_pass = 0;
  std::optional<AuditRecord> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};

// Checks the blow-up invariant identities over corpus x params; stops at the
// first failing instance. Refuses fast mode (it would be circular).
Prop2Summary verify_proposition2(const std::vector<Graph>& corpus, const std::vector<KS>& params,
                                 const AuditOptions& options = {}, int jobs = 1,
                                 const Diagnostic& diag = {});

}  // namespace powerhg
