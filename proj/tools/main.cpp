// Command-line front end: SLD computation, moments, verification, noise
// transforms, entanglement noise thresholds, ensemble statistics, and a
// report generator. Exit codes: 0 ok, 1 parse/usage, 2 resource cap,
// 3 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sectorlen/closed_forms.hpp"
#include "sectorlen/engine.hpp"
#include "sectorlen/ensemble.hpp"
#include "sectorlen/errors.hpp"
#include "sectorlen/graph.hpp"
#include "sectorlen/json_io.hpp"
#include "sectorlen/noise.hpp"
#include "sectorlen/pauli.hpp"

#include "acceptance_suite.hpp"

using namespace sectorlen;

namespace {

struct InputConfig {
  std::string family;
  int n = 0;
  int d = 2;
  int grid_l = 0, grid_m = 0, grid_k = 0;
  int distance = 0;
  std::string logical = "zero";
  double q = 0.5;
  std::uint64_t seed = 1;
  std::string graph6;
  std::string graph_file;
  std::string edge_list_file;
  std::string generators_file;
  std::string sld_file;
  bool use_stdin = false;
};

struct OutputConfig {
  std::string format = "json";
  std::string out_path;
};

struct CapsConfig {
  EnumerationOptions enumeration;
};

void add_input_flags(CLI::App* cmd, InputConfig& in, bool with_family = true) {
  if (with_family) {
    cmd->add_option("--family", in.family,
                    "named family: edgeless|complete|star|path|cycle|pusteblume|"
                    "grid2d|grid3d|ghz|w|rc4|er|surface");
    cmd->add_option("--n", in.n, "number of vertices / qudits");
    cmd->add_option("--d", in.d, "qudit dimension (default 2)");
    cmd->add_option("--l", in.grid_l, "grid rows (grid2d/grid3d)");
    cmd->add_option("--m", in.grid_m, "grid columns (grid2d/grid3d)");
    cmd->add_option("--k", in.grid_k, "grid depth (grid3d)");
    cmd->add_option("--distance", in.distance, "surface-code distance (odd)");
    cmd->add_option("--logical", in.logical, "surface-code state: zero|one|plus|minus");
    cmd->add_option("--q", in.q, "edge probability (family er)");
    cmd->add_option("--seed", in.seed, "sample seed (family er)");
  }
  cmd->add_option("--graph6", in.graph6, "graph6 string");
  cmd->add_option("--graph", in.graph_file, "JSON graph file");
  cmd->add_option("--edge-list", in.edge_list_file, "edge-list text file (needs --n)");
  cmd->add_option("--generators", in.generators_file, "stabilizer generator file");
  cmd->add_option("--sld", in.sld_file, "SLD JSON file");
  cmd->add_flag("--stdin", in.use_stdin, "read a graph from stdin (graph6 or JSON)");
}

void add_output_flags(CLI::App* cmd, OutputConfig& out) {
  cmd->add_option("--format", out.format, "json|csv|table (default json)");
  cmd->add_option("--out", out.out_path, "write output to a file instead of stdout");
}

void add_cap_flags(CLI::App* cmd, CapsConfig& caps) {
  cmd->add_option("--threads", caps.enumeration.threads,
                  "worker count (default: SECTORLEN_THREADS or all cores)");
  cmd->add_option("--max-n", caps.enumeration.max_qubits, "qubit enumeration cap");
  cmd->add_option("--max-log2", caps.enumeration.max_log2_states,
                  "cap on log2(d^n) for qudit enumeration");
}

int count_input_sources(const InputConfig& in) {
  int sources = 0;
  if (!in.family.empty()) ++sources;
  if (!in.graph6.empty()) ++sources;
  if (!in.graph_file.empty()) ++sources;
  if (!in.edge_list_file.empty()) ++sources;
  if (!in.generators_file.empty()) ++sources;
  if (!in.sld_file.empty()) ++sources;
  if (in.use_stdin) ++sources;
  return sources;
}

void require_single_source(const InputConfig& in) {
  if (count_input_sources(in) != 1) {
    throw std::invalid_argument("exactly one input source is required");
  }
}

bool family_is_graph(const std::string& f) {
  return f == "edgeless" || f == "complete" || f == "star" || f == "path" ||
         f == "cycle" || f == "pusteblume" || f == "grid2d" || f == "grid3d" ||
         f == "er";
}

Graph family_graph(const InputConfig& in) {
  const std::string& f = in.family;
  if (f == "grid2d") return make_grid2d(in.grid_l, in.grid_m, in.d);
  if (f == "grid3d") return make_grid3d(in.grid_l, in.grid_m, in.grid_k, in.d);
  if (f == "er") return sample_erdos_renyi(in.n, in.q, in.seed);
  Family fam;
  if (f == "edgeless") fam = Family::edgeless;
  else if (f == "complete") fam = Family::complete;
  else if (f == "star") fam = Family::star;
  else if (f == "path") fam = Family::path;
  else if (f == "cycle") fam = Family::cycle;
  else if (f == "pusteblume") fam = Family::pusteblume;
  else throw std::invalid_argument("family '" + f + "' is not a plain graph family");
  return make_family(fam, in.n, in.d);
}

std::optional<Graph> load_graph(const InputConfig& in) {
  if (!in.graph6.empty()) return parse_graph6(in.graph6);
  if (!in.graph_file.empty()) {
    return graph_from_json(ordered_json::parse(read_text_file(in.graph_file)));
  }
  if (!in.edge_list_file.empty()) {
    if (in.n < 1) throw std::invalid_argument("--edge-list requires --n");
    return parse_edge_list(read_text_file(in.edge_list_file), in.n, in.d);
  }
  if (in.use_stdin) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string text = ss.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      return graph_from_json(ordered_json::parse(text));
    }
    return parse_graph6(text);
  }
  if (!in.family.empty() && family_is_graph(in.family)) return family_graph(in);
  return std::nullopt;
}

LogicalState parse_logical(const std::string& s) {
  if (s == "zero") return LogicalState::zero;
  if (s == "one") return LogicalState::one;
  if (s == "plus") return LogicalState::plus;
  if (s == "minus") return LogicalState::minus;
  throw std::invalid_argument("unknown logical state '" + s + "'");
}

std::string format_table(const Sld& sld) {
  std::ostringstream out;
  out << "n=" << sld.n << " d=" << sld.d << " source=" << to_string(sld.source) << "\n";
  out << "k\tA_k\ta_k\n";
  const auto a = sld.normalized();
  out.precision(12);
  for (int k = 0; k <= sld.n; ++k) {
    out << k << "\t" << rat_to_string(sld.A[k]) << "\t" << a[k] << "\n";
  }
  return out.str();
}

void emit(const OutputConfig& out, const std::string& text) {
  if (out.out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out.out_path, text);
  }
}

void emit_sld(const OutputConfig& out, const Sld& sld) {
  if (out.format == "json") {
    emit(out, sld_to_json(sld).dump(2) + "\n");
  } else if (out.format == "csv") {
    emit(out, sld_to_csv(sld));
  } else if (out.format == "table") {
    emit(out, format_table(sld));
  } else {
    throw std::invalid_argument("unknown format '" + out.format + "'");
  }
}

// ---------------------------------------------------------------------------
// sld subcommand

Sld closed_form_sld(const InputConfig& in) {
  const std::string& f = in.family;
  if (f == "edgeless") return sld_fully_separable(in.n, in.d);
  if (f == "ghz" || f == "star" || f == "complete") {
    return in.d == 2 ? sld_ghz(in.n) : sld_ghz_qudit(in.n, in.d);
  }
  if (f == "cycle") {
    if (in.d != 2) throw std::invalid_argument("cycle closed form requires d=2");
    return sld_ring_cluster(in.n);
  }
  if (f == "pusteblume") {
    if (in.d != 2) throw std::invalid_argument("pusteblume closed form requires d=2");
    return sld_pusteblume(in.n);
  }
  if (f == "w") return sld_w_state(in.n);
  if (f == "rc4") return sld_rc4_qudit(in.d);
  throw std::invalid_argument("no closed form for family '" + f + "'");
}

bool family_has_closed_form(const std::string& f) {
  return f == "edgeless" || f == "ghz" || f == "star" || f == "complete" ||
         f == "cycle" || f == "pusteblume" || f == "w" || f == "rc4";
}

Sld compute_sld(const InputConfig& in, const std::string& method,
                const CapsConfig& caps) {
  require_single_source(in);
  if (!in.sld_file.empty()) {
    return sld_from_json(ordered_json::parse(read_text_file(in.sld_file)));
  }
  if (!in.generators_file.empty()) {
    const StabilizerGroup group =
        parse_generators(read_text_file(in.generators_file), in.d);
    return group_weight_distribution(group, caps.enumeration);
  }
  if (in.family == "surface") {
    const StabilizerGroup group = rotated_surface_code_logical_generators(
        in.distance, parse_logical(in.logical));
    return group_weight_distribution(group, caps.enumeration);
  }

  std::string m = method;
  if (m == "auto") {
    if (!in.family.empty() && family_has_closed_form(in.family)) m = "closed";
    else m = "brute";
  }
  if (m == "closed") {
    if (in.family.empty()) {
      throw std::invalid_argument("--method closed requires a --family");
    }
    return closed_form_sld(in);
  }

  if (in.family == "w") {
    if (m == "statevector") return statevector_sld(w_state_amplitudes(in.n), 2);
    throw std::invalid_argument("the W state has no graph; use --method closed or statevector");
  }
  const std::optional<Graph> g = load_graph(in);
  if (!g) throw std::invalid_argument("no graph input given");
  if (m == "brute") return brute_force_sld(*g, caps.enumeration);
  if (m == "group") {
    return group_weight_distribution(graph_stabilizer_generators(*g), caps.enumeration);
  }
  if (m == "statevector") return statevector_sld(graph_state_amplitudes(*g), g->d());
  throw std::invalid_argument("unknown method '" + m + "'");
}

// ---------------------------------------------------------------------------
// verify subcommand

int run_verify(const InputConfig& in, const OutputConfig& out) {
  if (in.sld_file.empty()) throw std::invalid_argument("verify requires --sld");
  const Sld sld = sld_from_json(ordered_json::parse(read_text_file(in.sld_file)));
  InputConfig graph_in = in;
  graph_in.sld_file.clear();
  std::optional<Graph> g;
  if (count_input_sources(graph_in) == 1) g = load_graph(graph_in);

  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("normalization", sld.is_pure_normalized());
  bool macwilliams = true;
  for (const Rat& r : macwilliams_residuals(sld)) {
    if (r != 0) macwilliams = false;
  }
  checks.emplace_back("macwilliams", macwilliams);
  checks.emplace_back("coarse_bound", coarse_bound_check(sld));
  if (g) {
    checks.emplace_back("a1_exact", sld.A[1] == Rat(a1_exact_qudit(*g)));
    if (g->d() == 2) {
      const GraphProperties p = properties(*g);
      checks.emplace_back("a2_leaves_twins", sld.A[2] == Rat(Int(p.leaves + p.twins)));
      const KernelCertificate cert = kernel_certificate(*g);
      if (cert.all_odd_solution) {
        checks.emplace_back("full_body_kernel_bound",
                            sld.A[sld.n] >= Rat(pow_int(2, cert.kernel_dim)));
      }
    }
    const Moments from_graph = moments_from_graph(*g);
    const Moments from_sld = moments_from_sld(sld);
    checks.emplace_back("moments", from_graph.mean == from_sld.mean &&
                                       from_graph.variance == from_sld.variance);
  }

  ordered_json j;
  j["checks"] = ordered_json::object();
  bool all_ok = true;
  std::string failed;
  for (const auto& [name, ok] : checks) {
    j["checks"][name] = ok ? "pass" : "fail";
    if (!ok) {
      all_ok = false;
      failed += (failed.empty() ? "" : ", ") + name;
    }
  }
  j["ok"] = all_ok;
  emit(out, j.dump(2) + "\n");
  if (!all_ok) throw verification_error("checks failed: " + failed);
  return 0;
}

// ---------------------------------------------------------------------------
// threshold subcommand

int run_threshold(const InputConfig& in, const OutputConfig& out,
                  const CapsConfig& caps, const std::string& criterion,
                  const ThresholdOptions& topts) {
  ThresholdReport report;
  if (criterion == "purity" || criterion == "nsl") {
    const Sld sld = compute_sld(in, "auto", caps);
    report = criterion == "purity" ? threshold_purity(sld, topts) : threshold_nsl(sld);
  } else if (criterion == "ppt-global") {
    report.criterion = "ppt-global";
    report.p_lower_bound = threshold_ppt_global_stabilizer(in.n, in.d);
    report.evaluations = 1;
  } else if (criterion == "ppt-ghz-local") {
    report.criterion = "ppt-ghz-local";
    report.p_lower_bound = threshold_ppt_ghz_local(in.n, in.d);
    report.evaluations = 1;
  } else if (criterion == "distill") {
    const std::optional<Graph> g = load_graph(in);
    if (!g) throw std::invalid_argument("distill threshold requires a graph input");
    report.criterion = "distill";
    report.p_lower_bound = threshold_distillation(*g);
    report.evaluations = 1;
  } else {
    throw std::invalid_argument("unknown criterion '" + criterion + "'");
  }
  emit(out, threshold_report_to_json(report).dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// repro subcommand

std::string sld_brief(const Sld& sld) {
  std::string s = "(";
  for (int k = 0; k <= sld.n; ++k) {
    s += rat_to_string(sld.A[k]);
    if (k < sld.n) s += ", ";
  }
  return s + ")";
}

int run_repro(const OutputConfig& out, const CapsConfig& caps) {
  std::ostringstream md;
  md.precision(6);
  md << "# Reproduction report\n\n";

  // Full acceptance suite first; the tables below re-derive the headline
  // numbers explicitly.
  const auto outcomes = acceptance::run_all(/*progress=*/true);
  int failed = 0;
  md << "## Acceptance suite\n\n| criterion | result | time |\n|---|---|---|\n";
  for (const auto& o : outcomes) {
    if (!o.passed) ++failed;
    md << "| " << o.label << " | " << (o.passed ? "pass" : "**FAIL**") << " | ";
    md.setf(std::ios::fixed);
    md.precision(2);
    md << o.seconds << " s |\n";
    md.unsetf(std::ios::fixed);
    md.precision(6);
  }
  md << "\n";

  // Path-graph correspondence table.
  md << "## Color assignments of the 3-vertex path\n\n";
  md << "| r | operator weight |\n|---|---|\n";
  const Graph p3 = make_family(Family::path, 3);
  const StabilizerGroup gens = graph_stabilizer_generators(p3);
  for (int r = 0; r < 8; ++r) {
    SymplecticPauli prod{{0, 0, 0}, {0, 0, 0}};
    for (int i = 0; i < 3; ++i) {
      if ((r >> i) & 1) {
        for (int j = 0; j < 3; ++j) {
          prod.r[j] ^= gens.generators[i].r[j];
          prod.s[j] ^= gens.generators[i].s[j];
        }
      }
    }
    md << "| (" << (r & 1) << "," << ((r >> 1) & 1) << "," << ((r >> 2) & 1)
       << ") | " << symplectic_weight(prod) << " |\n";
  }
  md << "\nSLD of the path state: " << sld_brief(brute_force_sld(p3)) << "\n\n";

  // Closed forms vs enumeration.
  md << "## Closed forms vs enumeration (exact equality)\n\n";
  bool closed_ok = true;
  for (int n = 2; n <= 12; ++n) {
    closed_ok &= sld_ghz(n).A == brute_force_sld(make_family(Family::star, n)).A;
  }
  for (int n = 5; n <= 12; ++n) {
    closed_ok &= sld_pusteblume(n).A ==
                 brute_force_sld(make_family(Family::pusteblume, n)).A;
  }
  for (int n = 3; n <= 14; ++n) {
    closed_ok &= sld_ring_cluster(n).A ==
                 brute_force_sld(make_family(Family::cycle, n)).A;
  }
  md << "GHZ / Pusteblume / ring-cluster closed forms match brute force: "
     << (closed_ok ? "yes" : "NO") << "\n\n";

  // Surface codes.
  md << "## Rotated surface code\n\n";
  const Sld surf9 = group_weight_distribution(
      rotated_surface_code_logical_generators(3, LogicalState::zero), caps.enumeration);
  md << "distance 3: " << sld_brief(surf9) << "\n\n";
  const Sld surf25 = group_weight_distribution(
      rotated_surface_code_logical_generators(5, LogicalState::zero), caps.enumeration);
  md << "distance 5: " << sld_brief(surf25) << "\n\n";
  const auto p9 = threshold_purity(surf9);
  const auto n9 = threshold_nsl(surf9);
  const auto p25 = threshold_purity(surf25);
  const auto n25 = threshold_nsl(surf25);
  md << "| state | purity threshold | full-body threshold |\n|---|---|---|\n";
  md << "| distance 3 | " << *p9.p_lower_bound << " | " << *n9.p_lower_bound << " |\n";
  md << "| distance 5 | " << *p25.p_lower_bound << " | " << *n25.p_lower_bound << " |\n\n";

  // Large-n limits.
  md << "## Large-n thresholds\n\n";
  const Sld ghz1000 = sld_ghz(1000);
  const Sld rcl1000 = sld_ring_cluster(1000);
  md << "- GHZ(1000) full-body threshold: " << *threshold_nsl(ghz1000).p_lower_bound
     << "  (1 - 1/sqrt(2) = " << 1.0 - 1.0 / std::sqrt(2.0) << ")\n";
  md << "- RCL(1000) purity threshold: " << *threshold_purity(rcl1000).p_lower_bound << "\n";
  md << "- RCL(1000) full-body threshold: " << *threshold_nsl(rcl1000).p_lower_bound << "\n";
  md << "- GHZ PPT local bound at n=2: " << threshold_ppt_ghz_local(2, 2)
     << "; general-d form at d=2,n=2: " << threshold_ppt_ghz_local_general(2, 2) << "\n";
  md << "- distillation bound, cycle: "
     << threshold_distillation(make_family(Family::cycle, 12))
     << "; single edge: " << threshold_distillation(make_family(Family::star, 2)) << "\n";

  emit(out, md.str());
  if (failed > 0) {
    throw verification_error(std::to_string(failed) + " acceptance criteria failed");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sector-length distributions of graph and stabilizer states"};
  app.require_subcommand(1);

  InputConfig in;
  OutputConfig out;
  CapsConfig caps;
  std::string method = "auto";
  std::string criterion = "purity";
  std::string noise_kind = "local";
  std::string noise_p = "0";
  ThresholdOptions topts;
  long samples = 1000;
  bool fixed_p = false;
  std::string csv_path;
  double ens_q = 0.5;
  std::uint64_t ens_seed = 1;
  int ens_n = 10;
  std::string moments_source;

  CLI::App* sld_cmd = app.add_subcommand("sld", "compute a sector-length distribution");
  add_input_flags(sld_cmd, in);
  add_output_flags(sld_cmd, out);
  add_cap_flags(sld_cmd, caps);
  sld_cmd->add_option("--method", method, "auto|brute|closed|group|statevector");

  CLI::App* moments_cmd = app.add_subcommand("moments", "mean and variance of the normalized SLD");
  add_input_flags(moments_cmd, in);
  add_output_flags(moments_cmd, out);
  add_cap_flags(moments_cmd, caps);
  moments_cmd->add_option("--from", moments_source, "graph (default) or sld");

  CLI::App* verify_cmd = app.add_subcommand("verify", "consistency checks on an SLD (+ optional graph)");
  add_input_flags(verify_cmd, in);
  add_output_flags(verify_cmd, out);

  CLI::App* noise_cmd = app.add_subcommand("noise", "apply a depolarizing-noise sector transform");
  add_input_flags(noise_cmd, in);
  add_output_flags(noise_cmd, out);
  add_cap_flags(noise_cmd, caps);
  noise_cmd->add_option("--kind", noise_kind, "local|global");
  noise_cmd->add_option("--p", noise_p, "noise strength (rational like 1/2 or decimal)");

  CLI::App* thresh_cmd = app.add_subcommand("threshold", "entanglement noise threshold lower bounds");
  add_input_flags(thresh_cmd, in);
  add_output_flags(thresh_cmd, out);
  add_cap_flags(thresh_cmd, caps);
  thresh_cmd->add_option("--criterion", criterion, "purity|nsl|ppt-global|ppt-ghz-local|distill");
  thresh_cmd->add_option("--grid", topts.grid, "grid resolution (default 2048)");
  thresh_cmd->add_option("--tol", topts.tol, "bisection tolerance (default 1e-12)");

  CLI::App* ens_cmd = app.add_subcommand("ensemble", "random graph-state ensemble statistics");
  add_output_flags(ens_cmd, out);
  add_cap_flags(ens_cmd, caps);
  ens_cmd->add_option("--n", ens_n, "vertices per sample")->required();
  ens_cmd->add_option("--q", ens_q, "edge probability")->required();
  ens_cmd->add_option("--samples", samples, "number of samples");
  ens_cmd->add_option("--seed", ens_seed, "master seed");
  ens_cmd->add_flag("--fixed-p", fixed_p, "compare to b(3/4) instead of the mean match");
  ens_cmd->add_option("--csv", csv_path, "write per-sample TVDs to a CSV file");

  CLI::App* graph_cmd = app.add_subcommand("graph", "emit a graph as a JSON dump");
  add_input_flags(graph_cmd, in);
  add_output_flags(graph_cmd, out);

  CLI::App* repro_cmd = app.add_subcommand("repro", "write a markdown reproduction report");
  add_output_flags(repro_cmd, out);
  add_cap_flags(repro_cmd, caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sld_cmd->parsed()) {
      emit_sld(out, compute_sld(in, method, caps));
      return 0;
    }
    if (moments_cmd->parsed()) {
      Moments m;
      if (moments_source == "sld" || !in.sld_file.empty()) {
        if (in.sld_file.empty()) throw std::invalid_argument("--from sld requires --sld");
        m = moments_from_sld(sld_from_json(ordered_json::parse(read_text_file(in.sld_file))));
      } else {
        const std::optional<Graph> g = load_graph(in);
        if (!g) throw std::invalid_argument("moments requires a graph input");
        m = moments_from_graph(*g);
      }
      emit(out, moments_to_json(m).dump(2) + "\n");
      return 0;
    }
    if (verify_cmd->parsed()) return run_verify(in, out);
    if (noise_cmd->parsed()) {
      const Sld sld = compute_sld(in, "auto", caps);
      const NoiseKind kind = noise_kind == "global" ? NoiseKind::global : NoiseKind::local;
      emit_sld(out, apply_noise(sld, {kind, rat_from_string(noise_p)}));
      return 0;
    }
    if (thresh_cmd->parsed()) return run_threshold(in, out, caps, criterion, topts);
    if (ens_cmd->parsed()) {
      EnsembleOptions eopts;
      eopts.fixed_p = fixed_p;
      eopts.enumeration = caps.enumeration;
      const EnsembleReport rep = monte_carlo_sld(ens_n, ens_q, samples, ens_seed, eopts);
      if (!csv_path.empty()) write_text_file(csv_path, ensemble_tvds_to_csv(rep));
      emit(out, ensemble_report_to_json(rep).dump(2) + "\n");
      return 0;
    }
    if (graph_cmd->parsed()) {
      require_single_source(in);
      const std::optional<Graph> g = load_graph(in);
      if (!g) throw std::invalid_argument("graph subcommand requires a graph input");
      emit(out, graph_to_json(*g).dump(2) + "\n");
      return 0;
    }
    if (repro_cmd->parsed()) return run_repro(out, caps);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const verification_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
