// powerhg: exact domination / matching / transversal numbers for graphs and
// generalized power hypergraphs, plus auditing of the equality
// characterizations over enumerated corpora.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "powerhg/audit.hpp"
#include "powerhg/canon.hpp"
#include "powerhg/enumerate.hpp"
#include "powerhg/expr.hpp"
#include "powerhg/graph6.hpp"

namespace {

using namespace powerhg;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kCatalogEnv = "POWERHG_CATALOG";
constexpr const char* kDefaultCatalogPath = "data/g_ge2_catalog.tsv";

struct NamedGraph {
  std::string label;
  Graph graph;
};

struct InputOptions {
  std::string construct;
  std::string graph6_code;
  std::string input_file;
};

void add_input_flags(CLI::App* cmd, InputOptions* in) {
  cmd->add_option("--construct", in->construct,
                  "inline construction expression, e.g. \"wedge_cycles(4,3)\"");
  cmd->add_option("--graph6", in->graph6_code, "graph6 code of the input graph");
  cmd->add_option("--input", in->input_file, "file of graph6 lines (one graph per line)");
}

std::string caret_diagnostic(const std::string& text, const ParseError& e) {
  std::string out = "error: " + std::string(e.what()) + "\n  " + text + "\n  ";
  for (std::size_t i = 0; i < e.offset() && i < text.size() + 1; ++i) out += ' ';
  out += '^';
  return out;
}

std::vector<NamedGraph> gather_graphs(const InputOptions& in, std::ostream& diag) {
  std::vector<NamedGraph> graphs;
  if (!in.construct.empty()) {
    try {
      graphs.push_back({in.construct, parse_construction(in.construct)});
    } catch (const ParseError& e) {
      diag << caret_diagnostic(in.construct, e) << "\n";
      throw;
    }
    return graphs;
  }
  if (!in.graph6_code.empty()) {
    graphs.push_back({in.graph6_code, parse_graph6(in.graph6_code)});
    return graphs;
  }
  std::istream* stream = &std::cin;
  std::ifstream file;
  if (!in.input_file.empty()) {
    file.open(in.input_file);
    if (!file) throw ConfigError("cannot open input file: " + in.input_file);
    stream = &file;
  }
  std::string line;
  while (std::getline(*stream, line)) {
    if (line.empty()) continue;
    graphs.push_back({line, parse_graph6(line)});
  }
  if (graphs.empty()) throw ConfigError("no input graphs (use --construct, --graph6, --input, or stdin)");
  return graphs;
}

// Catalog resolution: explicit flag, then the environment variable, then the
// repository-relative default. An explicitly named catalog must load; the
// defaults may be absent, in which case checks that need the catalog fail
// later with a configuration error.
std::optional<Catalog> resolve_catalog(const std::string& flag_path, std::ostream& diag) {
  std::string path = flag_path;
  bool required = !path.empty();
  if (path.empty()) {
    if (const char* env = std::getenv(kCatalogEnv)) path = env;
  }
  if (path.empty()) path = kDefaultCatalogPath;
  if (!std::filesystem::exists(path)) {
    if (required) throw ConfigError("catalog file not found: " + path);
    diag << "note: catalog not found at " << path << "; clause-iii family checks will fail\n";
    return std::nullopt;
  }
  return load_catalog_file(path);
}

std::string witness_text(const std::vector<int>& witness) {
  std::string out = "{";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(witness[i]);
  }
  return out + "}";
}

std::string witness_edges_text(const Graph& g, const std::vector<int>& witness) {
  std::string out = "{";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    const Edge& e = g.edges()[static_cast<std::size_t>(witness[i])];
    out += "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
  }
  return out + "}";
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(xs[i]);
  }
  return out;
}

ordered_json certificate_json(const InvariantCertificate& c) {
  return ordered_json{{"value", c.value}, {"witness", c.witness}};
}

std::vector<KS> parse_params(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw ConfigError("--params requires at least one k,s pair");
  std::vector<KS> params;
  for (const std::string& tok : tokens) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("bad --params token '" + tok + "' (expected k,s)");
    }
    KS ks;
    try {
      ks.k = std::stoi(tok.substr(0, comma));
      ks.s = std::stoi(tok.substr(comma + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad --params token '" + tok + "' (expected k,s)");
    }
    if (ks.k < 3 || ks.s < 1 || 2 * ks.s > ks.k) {
      throw ConfigError("parameters k=" + std::to_string(ks.k) + ", s=" + std::to_string(ks.s) +
                        " violate k >= 3, 1 <= s <= k/2");
    }
    params.push_back(ks);
  }
  return params;
}

struct CorpusOptions {
  int enumerate_order = 0;
  int max_edges = -1;
  std::string input_file;
};

void add_corpus_flags(CLI::App* cmd, CorpusOptions* c) {
  cmd->add_option("--enumerate", c->enumerate_order,
                  "audit all connected graphs of order 2..N (isolated-vertex-free)");
  cmd->add_option("--max-edges", c->max_edges, "edge-count cap for the enumerated corpus");
  cmd->add_option("--input", c->input_file, "file of graph6 lines; default stdin");
}

std::vector<Graph> gather_corpus(const CorpusOptions& c, std::ostream& diag) {
  std::vector<Graph> corpus;
  if (c.enumerate_order > 0) {
    return connected_graphs_upto(c.enumerate_order, c.max_edges, /*skip_trivial=*/true);
  }
  std::istream* stream = &std::cin;
  std::ifstream file;
  if (!c.input_file.empty()) {
    file.open(c.input_file);
    if (!file) throw ConfigError("cannot open input file: " + c.input_file);
    stream = &file;
  }
  std::string line;
  long long lineno = 0;
  while (std::getline(*stream, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      corpus.push_back(parse_graph6(line));
    } catch (const Error& e) {
      diag << "skipping corpus line " << lineno << ": " << e.what() << "\n";
    }
  }
  return corpus;
}

enum class Format { kHuman, kJsonl, kCsv };

Format parse_format(const std::string& name) {
  if (name == "human") return Format::kHuman;
  if (name == "jsonl") return Format::kJsonl;
  if (name == "csv") return Format::kCsv;
  throw ConfigError("unknown output format '" + name + "'");
}

// ---- subcommand bodies ------------------------------------------------------

int run_invariants(const InputOptions& in, bool hypergraph_input, Format format,
                   const SolverLimits& limits) {
  if (hypergraph_input) {
    std::string text;
    if (!in.input_file.empty()) {
      std::ifstream file(in.input_file);
      if (!file) throw ConfigError("cannot open input file: " + in.input_file);
      std::stringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    } else {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    }
    int k = 0;
    Hypergraph h = parse_hypergraph_text(text, &k);
    auto gamma = domination_number_hypergraph(h, limits);
    auto nu = matching_number_hypergraph(h, limits);
    auto tau = transversal_number_hypergraph(h, limits);
    if (format == Format::kJsonl) {
      ordered_json j;
      j["schema"] = "powerhg-invariants/1";
      j["kind"] = "hypergraph";
      j["order"] = h.order();
      j["edges"] = h.size();
      j["k"] = k;
      j["gamma"] = certificate_json(gamma);
      j["nu"] = certificate_json(nu);
      j["tau"] = certificate_json(tau);
      std::cout << j.dump() << "\n";
    } else if (format == Format::kCsv) {
      std::cout << "input,order,size,gamma,nu,tau,gamma_witness,nu_witness,tau_witness\n";
      std::cout << "hypergraph," << h.order() << "," << h.size() << "," << gamma.value << ","
                << nu.value << "," << tau.value << ",\"" << join_ints(gamma.witness) << "\",\""
                << join_ints(nu.witness) << "\",\"" << join_ints(tau.witness) << "\"\n";
    } else {
      std::cout << "hypergraph: order " << h.order() << ", " << h.size() << " edges, k = " << k
                << "\n";
      std::cout << "  gamma = " << gamma.value << "  witness " << witness_text(gamma.witness)
                << "\n";
      std::cout << "  nu    = " << nu.value << "  witness edges " << witness_text(nu.witness)
                << "\n";
      std::cout << "  tau   = " << tau.value << "  witness " << witness_text(tau.witness) << "\n";
    }
    return 0;
  }

  std::vector<NamedGraph> graphs = gather_graphs(in, std::cerr);
  if (format == Format::kCsv) {
    std::cout << "input,order,size,gamma,nu,tau,gamma_witness,nu_witness,tau_witness\n";
  }
  for (const NamedGraph& ng : graphs) {
    auto gamma = domination_number_graph(ng.graph, limits);
    auto nu = matching_number_graph(ng.graph);
    auto tau = transversal_number_graph(ng.graph, limits);
    if (format == Format::kJsonl) {
      ordered_json j;
      j["schema"] = "powerhg-invariants/1";
      j["kind"] = "graph";
      j["input"] = ng.label;
      j["graph6"] = write_graph6(ng.graph);
      j["order"] = ng.graph.order();
      j["size"] = ng.graph.size();
      j["gamma"] = certificate_json(gamma);
      j["nu"] = certificate_json(nu);
      j["tau"] = certificate_json(tau);
      std::cout << j.dump() << "\n";
    } else if (format == Format::kCsv) {
      std::cout << ng.label << "," << ng.graph.order() << "," << ng.graph.size() << ","
                << gamma.value << "," << nu.value << "," << tau.value << ",\""
                << join_ints(gamma.witness) << "\",\"" << join_ints(nu.witness) << "\",\""
                << join_ints(tau.witness) << "\"\n";
    } else {
      std::cout << ng.label << ": order " << ng.graph.order() << ", size " << ng.graph.size()
                << "\n";
      std::cout << "  gamma = " << gamma.value << "  witness " << witness_text(gamma.witness)
                << "\n";
      std::cout << "  nu    = " << nu.value << "  witness edges "
                << witness_edges_text(ng.graph, nu.witness) << "\n";
      std::cout << "  tau   = " << tau.value << "  witness " << witness_text(tau.witness) << "\n";
    }
  }
  return 0;
}

int run_blowup(const InputOptions& in, int k, int s, Format format) {
  std::vector<NamedGraph> graphs = gather_graphs(in, std::cerr);
  if (graphs.size() != 1) throw ConfigError("blowup expects exactly one input graph");
  BlowupHypergraph b = blow_up(graphs[0].graph, k, s);
  if (format == Format::kJsonl) {
    ordered_json j;
    j["schema"] = "powerhg-blowup/1";
    j["base_graph6"] = write_graph6(b.base);
    j["k"] = b.k;
    j["s"] = b.s;
    j["order"] = b.hypergraph.order();
    std::vector<std::vector<int>> edges;
    for (VertexSet e : b.hypergraph.edges()) edges.push_back(set_to_vertices(e));
    j["hyperedges"] = edges;
    std::vector<std::vector<int>> vblocks, eblocks;
    for (VertexSet v : b.vertex_blocks) vblocks.push_back(set_to_vertices(v));
    for (VertexSet e : b.edge_blocks) eblocks.push_back(set_to_vertices(e));
    j["vertex_blocks"] = vblocks;
    j["edge_blocks"] = eblocks;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << write_hypergraph_text(b.hypergraph, b.k);
  }
  return 0;
}

int run_families(const InputOptions& in, const std::string& catalog_path, Format format,
                 const SolverLimits& limits) {
  std::optional<Catalog> catalog = resolve_catalog(catalog_path, std::cerr);
  const Catalog* cat = catalog ? &*catalog : nullptr;
  std::vector<NamedGraph> graphs = gather_graphs(in, std::cerr);
  if (format == Format::kCsv) {
    std::cout << "input,graph6,in_g1,in_g_ge2,satisfies_lemma6,konig_egervary,gamma_equals_nu\n";
  }
  for (const NamedGraph& ng : graphs) {
    FamilyVerdict v = family_verdict(ng.graph, cat, limits);
    if (format == Format::kJsonl) {
      ordered_json j;
      j["schema"] = "powerhg-families/1";
      j["input"] = ng.label;
      j["graph6"] = write_graph6(ng.graph);
      j["in_g1"] = v.in_g1;
      j["in_g_ge2"] = v.in_g_ge2;
      j["satisfies_lemma6"] = v.satisfies_lemma6;
      j["konig_egervary"] = v.konig_egervary;
      j["gamma_equals_nu"] = v.gamma_equals_nu;
      j["reasons"] = v.reasons;
      std::cout << j.dump() << "\n";
    } else if (format == Format::kCsv) {
      auto b = [](bool x) { return x ? "true" : "false"; };
      std::cout << ng.label << "," << write_graph6(ng.graph) << "," << b(v.in_g1) << ","
                << b(v.in_g_ge2) << "," << b(v.satisfies_lemma6) << "," << b(v.konig_egervary)
                << "," << b(v.gamma_equals_nu) << "\n";
    } else {
      auto b = [](bool x) { return x ? "yes" : "no"; };
      std::cout << ng.label << " (" << write_graph6(ng.graph) << "):\n";
      std::cout << "  in G1:                 " << b(v.in_g1) << "\n";
      std::cout << "  in G_{>=2}:            " << b(v.in_g_ge2) << "\n";
      std::cout << "  bipartite pair cond.:  " << b(v.satisfies_lemma6) << "\n";
      std::cout << "  Koenig-Egervary:       " << b(v.konig_egervary) << "\n";
      std::cout << "  gamma = nu:            " << b(v.gamma_equals_nu) << "\n";
      for (const std::string& r : v.reasons) std::cout << "    " << r << "\n";
    }
  }
  return 0;
}

int run_enumerate(int order, int max_edges, const std::string& filter_name, int min_degree_req) {
  GraphFilter filter = [&](const Graph& g) {
    if (max_edges >= 0 && g.size() > max_edges) return false;
    if (min_degree_req > 0 && min_degree(g) < min_degree_req) return false;
    if (filter_name == "bipartite") return is_bipartite(g).has_value();
    if (filter_name == "non-bipartite") return !is_bipartite(g).has_value();
    return true;
  };
  if (!filter_name.empty() && filter_name != "all" && filter_name != "bipartite" &&
      filter_name != "non-bipartite") {
    throw ConfigError("unknown --filter '" + filter_name + "'");
  }
  for_each_connected_graph(order, [](const Graph& g) { std::cout << write_graph6(g) << "\n"; },
                           filter);
  return 0;
}

int run_audit(const InputOptions& in, int k, int s, bool fast, const std::string& catalog_path,
              Format format, const SolverLimits& limits) {
  std::optional<Catalog> catalog = resolve_catalog(catalog_path, std::cerr);
  AuditOptions options;
  options.limits = limits;
  options.catalog = catalog ? &*catalog : nullptr;
  options.fast_prop2_shortcut = fast;
  std::vector<NamedGraph> graphs = gather_graphs(in, std::cerr);
  bool any_failed = false;
  if (format == Format::kCsv) std::cout << audit_csv_header() << "\n";
  for (const NamedGraph& ng : graphs) {
    AuditRecord r = audit_graph(ng.graph, k, s, options);
    any_failed = any_failed || r.any_check_failed();
    if (format == Format::kJsonl) {
      std::cout << to_jsonl(r) << "\n";
    } else if (format == Format::kCsv) {
      std::cout << to_csv_row(r) << "\n";
    } else {
      auto b = [](bool x) { return x ? "yes" : "no"; };
      std::cout << ng.label << "  (k=" << k << ", s=" << s << ", mode "
                << (r.fast_mode ? "fast" : "direct") << ")\n";
      std::cout << "  base:  gamma=" << r.base_gamma.value << " nu=" << r.base_nu.value
                << " tau=" << r.base_tau.value << "  bipartite=" << b(r.base_bipartite)
                << "  KE=" << b(r.family.konig_egervary) << "\n";
      std::cout << "  blow-up (order " << r.hyper_order << "): gamma=" << r.hyper_gamma.value
                << " nu=" << r.hyper_nu.value << " tau=" << r.hyper_tau.value << "\n";
      std::cout << "    gamma witness " << witness_text(r.hyper_gamma.witness) << "\n";
      std::cout << "  prop2: " << (r.prop2.pass() ? "PASS" : "FAIL")
                << "  bounds: " << (r.bounds_ok ? "PASS" : "FAIL")
                << "  corrected: " << (r.corrected_ok ? "PASS" : "FAIL") << "\n";
      std::cout << "  thm2: " << to_string(r.thm2) << "\n";
      std::cout << "  thm3: " << to_string(r.thm3) << "\n";
      if (!r.complete) {
        std::cout << "  INCOMPLETE:";
        for (const std::string& e : r.errors) std::cout << " " << e << ";";
        std::cout << "\n";
      }
    }
  }
  return any_failed ? 1 : 0;
}

int run_hunt(const CorpusOptions& corpus_opts, const std::vector<std::string>& param_tokens,
             bool fast, const std::string& catalog_path, Format format, const SolverLimits& limits,
             int jobs) {
  std::vector<KS> params = parse_params(param_tokens);
  std::optional<Catalog> catalog = resolve_catalog(catalog_path, std::cerr);
  AuditOptions options;
  options.limits = limits;
  options.catalog = catalog ? &*catalog : nullptr;
  options.fast_prop2_shortcut = fast;
  std::vector<Graph> corpus = gather_corpus(corpus_opts, std::cerr);

  bool any_failed = false;
  if (format == Format::kCsv) std::cout << audit_csv_header() << "\n";
  HuntStats stats = hunt_counterexamples(
      corpus, params,
      [&](const AuditRecord& r) {
        any_failed = any_failed || r.any_check_failed();
        if (format == Format::kCsv) {
          std::cout << to_csv_row(r) << "\n";
        } else {
          std::cout << to_jsonl(r) << "\n";
        }
      },
      options, jobs, [](const std::string& msg) { std::cerr << msg << "\n"; });
  std::cerr << "hunt: audited " << stats.audited << ", emitted " << stats.emitted << ", skipped "
            << stats.skipped << "\n";
  return any_failed ? 1 : 0;
}

int run_verify_prop2(const CorpusOptions& corpus_opts, const std::vector<std::string>& param_tokens,
                     const std::string& catalog_path, const SolverLimits& limits, int jobs) {
  std::vector<KS> params = parse_params(param_tokens);
  std::optional<Catalog> catalog = resolve_catalog(catalog_path, std::cerr);
  AuditOptions options;
  options.limits = limits;
  options.catalog = catalog ? &*catalog : nullptr;
  std::vector<Graph> corpus = gather_corpus(corpus_opts, std::cerr);

  Prop2Summary summary = verify_proposition2(corpus, params, options, jobs,
                                             [](const std::string& msg) { std::cerr << msg << "\n"; });
  std::cout << "instances checked: " << summary.instances << "\n";
  std::cout << "nu identity:       " << summary.nu_pass << "/" << summary.instances << "\n";
  std::cout << "tau identity:      " << summary.tau_pass << "/" << summary.instances << "\n";
  std::cout << "gamma identity:    " << summary.gamma_pass << "/" << summary.instances << "\n";
  if (!summary.ok()) {
    std::cout << "FAILED instance:\n" << to_jsonl(*summary.first_failure) << "\n";
    return 1;
  }
  std::cout << "all blow-up invariant identities hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and theorem audits for generalized power hypergraphs"};
  app.require_subcommand(1);
  // Let global flags (--format, --catalog, --jobs, --node-budget) appear
  // after the subcommand as well.
  app.fallthrough();

  std::string format_name = "human";
  std::string catalog_path;
  std::uint64_t node_budget = SolverLimits{}.node_budget;
  int jobs = 1;
  app.add_option("--format", format_name, "output format: human, jsonl, csv")
      ->capture_default_str();
  app.add_option("--catalog", catalog_path,
                 "catalog file of the nine G_{>=2} graphs (default: $POWERHG_CATALOG or " +
                     std::string(kDefaultCatalogPath) + ")");
  app.add_option("--node-budget", node_budget, "branch-and-bound node budget")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for corpus commands")->capture_default_str();

  InputOptions invariants_in;
  bool invariants_hyper = false;
  CLI::App* cmd_invariants =
      app.add_subcommand("invariants", "gamma, nu, tau with certificates");
  add_input_flags(cmd_invariants, &invariants_in);
  cmd_invariants->add_flag("--hypergraph", invariants_hyper,
                           "read a hypergraph text file instead of graphs");

  InputOptions blowup_in;
  int blowup_k = 0, blowup_s = 0;
  CLI::App* cmd_blowup = app.add_subcommand("blowup", "emit the blow-up of a graph");
  add_input_flags(cmd_blowup, &blowup_in);
  cmd_blowup->add_option("--k", blowup_k, "hyperedge size")->required();
  cmd_blowup->add_option("--s", blowup_s, "vertex blow-up size")->required();

  InputOptions families_in;
  CLI::App* cmd_families = app.add_subcommand("families", "family membership verdicts");
  add_input_flags(cmd_families, &families_in);

  int enum_order = 0, enum_max_edges = -1, enum_min_degree = 0;
  std::string enum_filter;
  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "connected graphs of a given order, one per class");
  cmd_enumerate->add_option("--order", enum_order, "number of vertices (1..9)")->required();
  cmd_enumerate->add_option("--max-edges", enum_max_edges, "keep only graphs with at most M edges");
  cmd_enumerate->add_option("--min-degree", enum_min_degree, "keep only graphs with min degree >= D");
  cmd_enumerate->add_option("--filter", enum_filter, "all, bipartite, or non-bipartite");

  InputOptions audit_in;
  int audit_k = 0, audit_s = 0;
  bool audit_fast = false;
  CLI::App* cmd_audit = app.add_subcommand("audit", "full audit record for one (graph, k, s)");
  add_input_flags(cmd_audit, &audit_in);
  cmd_audit->add_option("--k", audit_k, "hyperedge size")->required();
  cmd_audit->add_option("--s", audit_s, "vertex blow-up size")->required();
  cmd_audit->add_flag("--fast", audit_fast, "fill hypergraph values via the blow-up identities (labeled fast)");

  CorpusOptions hunt_corpus;
  std::vector<std::string> hunt_params;
  bool hunt_fast = false;
  CLI::App* cmd_hunt = app.add_subcommand("hunt", "emit refutations over a corpus");
  add_corpus_flags(cmd_hunt, &hunt_corpus);
  cmd_hunt->add_option("--params", hunt_params, "k,s pairs, e.g. --params 3,1 4,2")
      ->required()
      ->expected(-1);
  cmd_hunt->add_flag("--fast", hunt_fast, "identity shortcut for scouting (labeled fast)");

  CorpusOptions verify_corpus;
  std::vector<std::string> verify_params;
  CLI::App* cmd_verify =
      app.add_subcommand("verify-prop2", "check the blow-up invariant identities over a corpus");
  add_corpus_flags(cmd_verify, &verify_corpus);
  cmd_verify->add_option("--params", verify_params, "k,s pairs, e.g. --params 3,1 4,2")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  SolverLimits limits;
  limits.node_budget = node_budget;

  try {
    Format format = parse_format(format_name);
    if (cmd_invariants->parsed()) {
      return run_invariants(invariants_in, invariants_hyper, format, limits);
    }
    if (cmd_blowup->parsed()) return run_blowup(blowup_in, blowup_k, blowup_s, format);
    if (cmd_families->parsed()) {
      return run_families(families_in, catalog_path, format, limits);
    }
    if (cmd_enumerate->parsed()) {
      return run_enumerate(enum_order, enum_max_edges, enum_filter, enum_min_degree);
    }
    if (cmd_audit->parsed()) {
      return run_audit(audit_in, audit_k, audit_s, audit_fast, catalog_path, format, limits);
    }
    if (cmd_hunt->parsed()) {
      return run_hunt(hunt_corpus, hunt_params, hunt_fast, catalog_path, format, limits, jobs);
    }
    if (cmd_verify->parsed()) {
      return run_verify_prop2(verify_corpus, verify_params, catalog_path, limits, jobs);
    }
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
