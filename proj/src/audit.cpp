#include "powerhg/audit.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "powerhg/graph6.hpp"

namespace powerhg {

using ordered_json = nlohmann::ordered_json;

bool is_refuted(TheoremVerdict v) {
  return v == TheoremVerdict::kRefutedEqualityWithoutMembership ||
         v == TheoremVerdict::kRefutedMembershipWithoutEquality;
}

std::string to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::kNotApplicable:
      return "NOT_APPLICABLE";
    case TheoremVerdict::kHolds:
      return "HOLDS";
    case TheoremVerdict::kRefutedEqualityWithoutMembership:
      return "REFUTED_EQUALITY_WITHOUT_MEMBERSHIP";
    case TheoremVerdict::kRefutedMembershipWithoutEquality:
      return "REFUTED_MEMBERSHIP_WITHOUT_EQUALITY";
  }
  return "UNKNOWN";
}

namespace {

TheoremVerdict compare_prediction(bool membership, bool equality) {
  if (membership == equality) return TheoremVerdict::kHolds;
  if (equality) return TheoremVerdict::kRefutedEqualityWithoutMembership;
  return TheoremVerdict::kRefutedMembershipWithoutEquality;
}

// Runs fn(i) for i in [0, count) across `jobs` workers; exceptions are
// rethrown in the caller after all workers finish.
void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      long long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int workers = std::min<long long>(jobs, count);
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

AuditRecord audit_graph(const Graph& g, int k, int s, const AuditOptions& options) {
  if (!is_connected(g)) throw ParameterError("audit requires a connected base graph");
  AuditRecord r;
  r.graph6 = write_graph6(g);
  r.k = k;
  r.s = s;
  r.base_order = g.order();
  r.base_size = g.size();
  r.fast_mode = options.fast_prop2_shortcut;

  BlowupHypergraph blown = blow_up(g, k, s);
  r.hyper_order = blown.hypergraph.order();

  const SolverLimits& limits = options.limits;
  bool failed = false;
  auto run = [&](const char* field, auto&& compute, InvariantCertificate& out) {
    try {
      out = compute();
    } catch (const ResourceError& e) {
      r.errors.push_back(std::string(field) + ": " + e.what());
      failed = true;
    }
  };

  run("base gamma", [&] { return domination_number_graph(g, limits); }, r.base_gamma);
  run("base nu", [&] { return matching_number_graph(g); }, r.base_nu);
  run("base tau", [&] { return transversal_number_graph(g, limits); }, r.base_tau);
  if (r.fast_mode) {
    // Identity shortcut: values only, no measured certificates.
    bool half = 2 * s == k;
    r.hyper_nu.value = r.base_nu.value;
    r.hyper_tau.value = r.base_tau.value;
    r.hyper_gamma.value = half ? r.base_gamma.value : r.base_tau.value;
  } else {
    run("hyper gamma", [&] { return domination_number_hypergraph(blown.hypergraph, limits); },
        r.hyper_gamma);
    run("hyper nu", [&] { return matching_number_hypergraph(blown.hypergraph, limits); },
        r.hyper_nu);
    run("hyper tau", [&] { return transversal_number_hypergraph(blown.hypergraph, limits); },
        r.hyper_tau);
  }

  r.base_bipartite = is_bipartite(g).has_value();
  try {
    r.family = family_verdict(g, options.catalog, limits);
  } catch (const ResourceError& e) {
    r.errors.push_back(std::string("family: ") + e.what());
    failed = true;
  }
  if (failed) {
    r.complete = false;
    return r;
  }
  r.complete = true;

  bool half = 2 * s == k;
  r.prop2.nu_eq = r.hyper_nu.value == r.base_nu.value;
  r.prop2.tau_eq = r.hyper_tau.value == r.base_tau.value;
  r.prop2.gamma_eq = half ? r.hyper_gamma.value == r.base_gamma.value
                          : r.hyper_gamma.value == r.base_tau.value;
  r.bounds_ok = half ? r.hyper_gamma.value <= r.hyper_nu.value
                     : (r.hyper_nu.value <= r.hyper_gamma.value &&
                        r.hyper_gamma.value <= 2 * r.hyper_nu.value);

  bool equality = r.hyper_gamma.value == r.hyper_nu.value;
  bool predicted_membership =
      half ? (r.family.in_g1 || r.family.in_g_ge2) : r.base_bipartite;
  if (s == 1) {
    r.thm2 = compare_prediction(predicted_membership, equality);
    r.thm3 = TheoremVerdict::kNotApplicable;
  } else {
    r.thm2 = TheoremVerdict::kNotApplicable;
    r.thm3 = compare_prediction(predicted_membership, equality);
  }
  r.corrected_ok = half ? (equality == r.family.gamma_equals_nu)
                        : (equality == r.family.konig_egervary);
  return r;
}

namespace {

ordered_json certificate_json(const InvariantCertificate& c) {
  return ordered_json{{"value", c.value}, {"witness", c.witness}};
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string to_jsonl(const AuditRecord& r) {
  ordered_json j;
  j["schema"] = "powerhg-audit/1";
  j["graph6"] = r.graph6;
  j["k"] = r.k;
  j["s"] = r.s;
  j["base"] = ordered_json{{"order", r.base_order},
                           {"size", r.base_size},
                           {"gamma", certificate_json(r.base_gamma)},
                           {"nu", certificate_json(r.base_nu)},
                           {"tau", certificate_json(r.base_tau)}};
  j["hypergraph"] = ordered_json{{"order", r.hyper_order},
                                 {"edges", r.base_size},
                                 {"gamma", certificate_json(r.hyper_gamma)},
                                 {"nu", certificate_json(r.hyper_nu)},
                                 {"tau", certificate_json(r.hyper_tau)}};
  j["family"] = ordered_json{{"base_bipartite", r.base_bipartite},
                             {"in_g1", r.family.in_g1},
                             {"in_g_ge2", r.family.in_g_ge2},
                             {"satisfies_lemma6", r.family.satisfies_lemma6},
                             {"konig_egervary", r.family.konig_egervary},
                             {"gamma_equals_nu", r.family.gamma_equals_nu},
                             {"reasons", r.family.reasons}};
  j["verdicts"] = ordered_json{{"prop2", ordered_json{{"nu", pass_fail(r.prop2.nu_eq)},
                                                      {"tau", pass_fail(r.prop2.tau_eq)},
                                                      {"gamma", pass_fail(r.prop2.gamma_eq)}}},
                               {"bounds", pass_fail(r.bounds_ok)},
                               {"thm2", to_string(r.thm2)},
                               {"thm3", to_string(r.thm3)},
                               {"corrected", pass_fail(r.corrected_ok)}};
  j["mode"] = r.fast_mode ? "fast" : "direct";
  j["complete"] = r.complete;
  if (!r.errors.empty()) j["errors"] = r.errors;
  return j.dump();
}

std::string audit_csv_header() {
  return "graph6,k,s,base_order,base_size,hyper_order,gamma_g,nu_g,tau_g,gamma_h,nu_h,tau_h,"
         "base_bipartite,in_g1,in_g_ge2,satisfies_lemma6,konig_egervary,gamma_equals_nu,"
         "prop2,bounds,thm2,thm3,corrected,mode,complete";
}

std::string to_csv_row(const AuditRecord& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string row = r.graph6;
  row += "," + std::to_string(r.k) + "," + std::to_string(r.s);
  row += "," + std::to_string(r.base_order) + "," + std::to_string(r.base_size);
  row += "," + std::to_string(r.hyper_order);
  row += "," + std::to_string(r.base_gamma.value) + "," + std::to_string(r.base_nu.value) + "," +
         std::to_string(r.base_tau.value);
  row += "," + std::to_string(r.hyper_gamma.value) + "," + std::to_string(r.hyper_nu.value) +
         "," + std::to_string(r.hyper_tau.value);
  row += std::string(",") + b(r.base_bipartite) + "," + b(r.family.in_g1) + "," +
         b(r.family.in_g_ge2) + "," + b(r.family.satisfies_lemma6) + "," +
         b(r.family.konig_egervary) + "," + b(r.family.gamma_equals_nu);
  row += std::string(",") + pass_fail(r.prop2.pass()) + "," + pass_fail(r.bounds_ok) + "," +
         to_string(r.thm2) + "," + to_string(r.thm3) + "," + pass_fail(r.corrected_ok);
  row += std::string(",") + (r.fast_mode ? "fast" : "direct") + "," + b(r.complete);
  return row;
}

namespace {

struct TaskResult {
  bool ok = false;
  AuditRecord record;
  std::string diagnostic;
};

std::vector<TaskResult> audit_all(const std::vector<Graph>& corpus, const std::vector<KS>& params,
                                  const AuditOptions& options, int jobs) {
  long long total = static_cast<long long>(corpus.size()) * static_cast<long long>(params.size());
  std::vector<TaskResult> results(static_cast<std::size_t>(total));
  parallel_for(total, jobs, [&](long long idx) {
    const Graph& g = corpus[static_cast<std::size_t>(idx / static_cast<long long>(params.size()))];
    const KS& ks = params[static_cast<std::size_t>(idx % static_cast<long long>(params.size()))];
    TaskResult& out = results[static_cast<std::size_t>(idx)];
    try {
      out.record = audit_graph(g, ks.k, ks.s, options);
      out.ok = true;
    } catch (const Error& e) {
      out.diagnostic = "skipping " + write_graph6(g) + " (k=" + std::to_string(ks.k) +
                       ", s=" + std::to_string(ks.s) + "): " + e.what();
    }
  });
  return results;
}

}  // namespace

HuntStats hunt_counterexamples(const std::vector<Graph>& corpus, const std::vector<KS>& params,
                               const RecordSink& sink, const AuditOptions& options, int jobs,
                               const Diagnostic& diag) {
  HuntStats stats;
  for (const TaskResult& res : audit_all(corpus, params, options, jobs)) {
    if (!res.ok) {
      ++stats.skipped;
      if (diag) diag(res.diagnostic);
      continue;
    }
    ++stats.audited;
    if (!res.record.complete) {
      ++stats.skipped;
      if (diag) diag("incomplete record for " + res.record.graph6);
      continue;
    }
    if (res.record.any_theorem_refuted() || res.record.any_check_failed()) {
      ++stats.emitted;
      sink(res.record);
    }
  }
  return stats;
}

Prop2Summary verify_proposition2(const std::vector<Graph>& corpus, const std::vector<KS>& params,
                                 const AuditOptions& options, int jobs, const Diagnostic& diag) {
  if (options.fast_prop2_shortcut) {
    throw ParameterError("verify-prop2 must measure the blow-ups directly; fast mode is refused");
  }
  Prop2Summary summary;
  for (const TaskResult& res : audit_all(corpus, params, options, jobs)) {
    if (!res.ok) {
      if (diag) diag(res.diagnostic);
      continue;
    }
    if (!res.record.complete) {
      if (diag) diag("incomplete record for " + res.record.graph6);
      continue;
    }
    ++summary.instances;
    summary.nu_pass += res.record.prop2.nu_eq ? 1 : 0;
    summary.tau_pass += res.record.prop2.tau_eq ? 1 : 0;
    summary.gamma_pass += res.record.prop2.gamma_eq ? 1 : 0;
    if (!res.record.prop2.pass() && !summary.first_failure) {
      summary.first_failure = res.record;
      break;
    }
  }
  return summary;
}

}  // namespace powerhg
