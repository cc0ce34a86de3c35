// pwgs: sampling and reconstruction for bandlimited signals on graphs.
//
// Subcommands operate on graph JSON files ({"n": ..., "edges": [[u,v],...]}),
// vertex set JSON files ({"vertices": [...]}) and signal CSVs
// (vertex_id,real,imag).  Every report embeds a run manifest; reruns with
// identical inputs are byte-identical apart from the manifest timestamp.
//
// Exit codes: 0 success, 2 invalid input or parameters, 3 verification
// found a violated bound, 64 unknown subcommand, 66 unreadable input file,
// 73 unwritable output file.

#include <cstdio>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pwgs/io.hpp"
#include "pwgs/verify.hpp"
#include "pwgs/version.hpp"

namespace {

using pwgs::Bandwidth;
using pwgs::Error;
using pwgs::ErrorCode;
using pwgs::Graph;
using pwgs::Spectrum;
using pwgs::VertexSet;
using pwgs::io::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::FileReadError: return 66;
    case ErrorCode::FileWriteError: return 73;
    default: return 2;
  }
}

void print_error(const std::string& code_name, const std::string& message) {
  json err{{"schema", 1}, {"error", {{"code", code_name}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& command, json inputs, json parameters) {
  return json{{"command", command},
              {"tool_version", pwgs::kVersion},
              {"timestamp", utc_timestamp()},
              {"inputs", std::move(inputs)},
              {"parameters", std::move(parameters)}};
}

void emit_report(const json& report, const std::string& output_path) {
  if (output_path.empty())
    std::cout << report.dump(2) << "\n";
  else
    pwgs::io::save_json(report, output_path);
}

void emit_text(const std::string& text, const std::string& output_path) {
  if (output_path.empty())
    std::cout << text;
  else
    pwgs::io::save_text(text, output_path);
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
  std::vector<int> values;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      pwgs::fail(ErrorCode::InvalidParameter,
                 what + ": cannot parse integer from \"" + token + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

// Shared option bundle: a graph input plus the spectral knobs.
struct GraphArgs {
  std::string graph_path;
  int size_limit = 5000;
  double tie_tol_factor = 1e-9;

  void attach(CLI::App& app) {
    app.add_option("-g,--graph", graph_path, "input graph JSON file")
        ->required();
    app.add_option("--size-limit", size_limit,
                   "largest vertex count for dense eigendecomposition");
    app.add_option("--tie-tol", tie_tol_factor,
                   "band-edge tie tolerance factor (default 1e-9)");
  }

  Graph load() const { return pwgs::io::load_graph(graph_path); }
  Spectrum spectrum(const Graph& g) const {
    pwgs::SpectrumOptions opts;
    opts.size_limit = size_limit;
    opts.tie_tol_factor = tie_tol_factor;
    return pwgs::compute_spectrum(g, opts);
  }
  json params() const {
    return json{{"size_limit", size_limit}, {"tie_tol", tie_tol_factor}};
  }
};

// Bandwidth given directly or as a spectrum quantile (exactly one of the
// two).  The quantile uses linear interpolation between order statistics.
struct OmegaArgs {
  std::optional<double> omega;
  std::optional<double> quantile;

  void attach(CLI::App& app) {
    app.add_option("--omega", omega, "bandwidth");
    app.add_option("--omega-quantile", quantile,
                   "bandwidth as a quantile of the spectrum, in [0, 1]");
  }

  double resolve(const Spectrum& spec) const {
    if (omega.has_value() == quantile.has_value())
      pwgs::fail(ErrorCode::InvalidParameter,
                 "exactly one of --omega and --omega-quantile is required");
    if (omega) return *omega;
    double q = *quantile;
    if (!(q >= 0.0 && q <= 1.0))
      pwgs::fail(ErrorCode::InvalidParameter,
                 "--omega-quantile must lie in [0, 1]");
    double pos = q * (spec.n() - 1);
    int lo = static_cast<int>(pos);
    if (lo >= spec.n() - 1) return spec.eigenvalues(spec.n() - 1);
    double frac = pos - lo;
    return (1.0 - frac) * spec.eigenvalues(lo) +
           frac * spec.eigenvalues(lo + 1);
  }

  json params(double resolved) const {
    json p{{"omega", resolved}};
    if (quantile) p["omega_quantile"] = *quantile;
    return p;
  }
};

// A vertex set from --set (comma-separated ids) or --set-file (JSON).
struct SetArgs {
  std::string inline_set;
  std::string set_file;

  void attach(CLI::App& app, const std::string& what) {
    app.add_option("--set", inline_set, what + " as comma-separated ids");
    app.add_option("--set-file", set_file, what + " as a JSON file");
  }

  VertexSet resolve() const {
    if (inline_set.empty() == set_file.empty())
      pwgs::fail(ErrorCode::InvalidParameter,
                 "exactly one of --set and --set-file is required");
    if (!set_file.empty()) return pwgs::io::load_vertex_set(set_file);
    return VertexSet(parse_int_list(inline_set, "--set"));
  }

  json params(const VertexSet& s) const { return json(s.members()); }
};

// Thrown after help text has been printed; main turns it into exit 0.
struct ExitSuccess {};

void parse_or_report(CLI::App& app, int argc, char** argv) {
  // argv[0] here is the subcommand name, which parse() skips as the
  // program name
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    std::cout << app.help();
    throw ExitSuccess{};
  }
}

int cmd_gen(int argc, char** argv) {
  CLI::App app{"generate a graph from a named family"};
  app.name("pwgs gen");
  std::string family;
  int n = 0;
  std::string dims_text;
  bool wrap = false;
  std::string branching_text;
  double edge_prob = 0.1;
  std::uint64_t seed = 0;
  std::string output;
  app.add_option("--family", family,
                 "path | cycle | complete | lattice_box | radial_tree | "
                 "random_connected")
      ->required();
  app.add_option("--n", n, "vertex count (path, cycle, complete, random)");
  app.add_option("--dims", dims_text, "lattice side lengths, e.g. 3,4,5");
  app.add_flag("--wrap", wrap, "close every lattice axis into a cycle");
  app.add_option("--branching", branching_text,
                 "children per level for radial_tree, e.g. 3,2,2");
  app.add_option("--edge-prob", edge_prob,
                 "extra edge probability for random_connected");
  app.add_option("--seed", seed, "RNG seed for random_connected");
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = [&] {
    if (family == "path") return pwgs::make_path(n);
    if (family == "cycle") return pwgs::make_cycle(n);
    if (family == "complete") return pwgs::make_complete(n);
    if (family == "lattice_box")
      return pwgs::make_lattice_box(parse_int_list(dims_text, "--dims"), wrap);
    if (family == "radial_tree")
      return pwgs::make_radial_tree(parse_int_list(branching_text, "--branching"));
    if (family == "random_connected")
      return pwgs::make_random_connected(n, edge_prob, seed);
    pwgs::fail(ErrorCode::InvalidParameter, "unknown family \"" + family + "\"");
  }();

  json params{{"family", family}};
  if (family == "lattice_box") {
    params["dims"] = parse_int_list(dims_text, "--dims");
    params["wrap"] = wrap;
  } else if (family == "radial_tree") {
    params["branching"] = parse_int_list(branching_text, "--branching");
  } else {
    params["n"] = n;
    if (family == "random_connected") {
      params["edge_prob"] = edge_prob;
      params["seed"] = seed;
    }
  }

  json report = pwgs::io::graph_to_json(g);
  report["schema"] = 1;
  report["graph_hash"] = pwgs::io::graph_hash(g);
  report["manifest"] = make_manifest("gen", json::object(), params);
  emit_report(report, output);
  return 0;
}

int cmd_spectrum(int argc, char** argv) {
  CLI::App app{"eigenvalues and band data of the normalized Laplacian"};
  app.name("pwgs spectrum");
  GraphArgs graph_args;
  std::string output;
  graph_args.attach(app);
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  Spectrum spec = graph_args.spectrum(g);
  json report = pwgs::io::spectrum_to_json(spec);
  report["schema"] = 1;
  report["graph_hash"] = pwgs::io::graph_hash(g);
  report["manifest"] = make_manifest(
      "spectrum", json{{"graph", graph_args.graph_path}}, graph_args.params());
  emit_report(report, output);
  return 0;
}

int cmd_certify_lambda(int argc, char** argv) {
  CLI::App app{"smallest Poincare constant of a vertex subset, with witness"};
  app.name("pwgs certify-lambda");
  GraphArgs graph_args;
  SetArgs set_args;
  std::string output;
  graph_args.attach(app);
  set_args.attach(app, "subset to certify");
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  VertexSet s = set_args.resolve();
  auto cert = pwgs::minimal_lambda(g, s);
  json report = pwgs::io::lambda_certificate_to_json(cert);
  report["schema"] = 1;
  report["graph_hash"] = pwgs::io::graph_hash(g);
  report["manifest"] =
      make_manifest("certify-lambda", json{{"graph", graph_args.graph_path}},
                    json{{"set", set_args.params(s)}});
  emit_report(report, output);
  return 0;
}

int cmd_frame(int argc, char** argv) {
  CLI::App app{"frame bounds of a sampling set on the bandlimited space"};
  app.name("pwgs frame");
  GraphArgs graph_args;
  OmegaArgs omega_args;
  SetArgs set_args;
  std::string output;
  graph_args.attach(app);
  omega_args.attach(app);
  set_args.attach(app, "sampling set");
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  Spectrum spec = graph_args.spectrum(g);
  double omega = omega_args.resolve(spec);
  VertexSet w = set_args.resolve();
  auto fr = pwgs::frame_bounds(spec, Bandwidth(omega), w);
  json report = pwgs::io::frame_report_to_json(fr);
  report["schema"] = 1;
  report["graph_hash"] = pwgs::io::graph_hash(g);
  json params = graph_args.params();
  params.update(omega_args.params(omega));
  params["set"] = set_args.params(w);
  report["manifest"] = make_manifest(
      "frame", json{{"graph", graph_args.graph_path}}, params);
  emit_report(report, output);
  return 0;
}

int cmd_reconstruct(int argc, char** argv) {
  CLI::App app{"least-squares reconstruction from samples on a vertex set"};
  app.name("pwgs reconstruct");
  GraphArgs graph_args;
  OmegaArgs omega_args;
  SetArgs set_args;
  std::string samples_path;
  double rank_tol = pwgs::kRankTol;
  std::string output;
  graph_args.attach(app);
  omega_args.attach(app);
  set_args.attach(app, "sampling set");
  app.add_option("--samples", samples_path,
                 "sample CSV (vertex_id,real,imag), vertices restricted to "
                 "the sampling set")
      ->required();
  app.add_option("--rank-tol", rank_tol,
                 "lower frame bound below which reconstruction is refused");
  app.add_option("-o,--output", output, "output signal CSV (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  Spectrum spec = graph_args.spectrum(g);
  double omega = omega_args.resolve(spec);
  VertexSet w = set_args.resolve();
  w.check_range(g.vertex_count());
  Eigen::VectorXcd samples = pwgs::io::load_samples_csv(samples_path, w);
  pwgs::Signal f = pwgs::reconstruct(spec, Bandwidth(omega), w, samples, rank_tol);
  emit_text(pwgs::io::signal_csv_text(f), output);
  return 0;
}

int cmd_search_lambda(int argc, char** argv) {
  CLI::App app{"greedy search for a large removable lambda-set"};
  app.name("pwgs search-lambda");
  GraphArgs graph_args;
  OmegaArgs omega_args;
  double lambda_cap = 0.0;
  std::string target = "removed";
  std::uint64_t seed = 0;
  int max_iterations = 1000;
  std::string step_log;
  std::string output;
  graph_args.attach(app);
  omega_args.attach(app);
  app.add_option("--lambda-cap", lambda_cap,
                 "admissibility cap on lambda_min (default (1-1e-3)/omega)");
  app.add_option("--target", target, "removed | samples");
  app.add_option("--seed", seed, "recorded in the manifest");
  app.add_option("--max-iterations", max_iterations, "greedy step limit");
  app.add_option("--step-log", step_log, "write per-step JSON lines here");
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  Spectrum spec = graph_args.spectrum(g);
  pwgs::SearchConfig cfg;
  cfg.omega = omega_args.resolve(spec);
  cfg.lambda_cap = lambda_cap;
  if (target == "removed")
    cfg.target = pwgs::SearchConfig::Target::maximize_removed;
  else if (target == "samples")
    cfg.target = pwgs::SearchConfig::Target::minimize_samples;
  else
    pwgs::fail(ErrorCode::InvalidParameter,
               "--target must be \"removed\" or \"samples\"");
  cfg.seed = seed;
  cfg.max_iterations = max_iterations;

  auto result = pwgs::greedy_lambda_set(g, spec, cfg);
  if (!step_log.empty()) {
    std::string lines;
    for (const auto& step : pwgs::io::search_log_to_json(result.log))
      lines += step.dump() + "\n";
    pwgs::io::save_text(lines, step_log);
  }

  json report = pwgs::io::lambda_certificate_to_json(result.certificate);
  report["schema"] = 1;
  report["steps"] = static_cast<int>(result.log.size());
  report["graph_hash"] = pwgs::io::graph_hash(g);
  json params = graph_args.params();
  params.update(omega_args.params(cfg.omega));
  params["lambda_cap"] = cfg.lambda_cap > 0.0 ? cfg.lambda_cap
                                              : (1.0 - 1e-3) / cfg.omega;
  params["target"] = target;
  params["seed"] = seed;
  params["max_iterations"] = max_iterations;
  report["manifest"] = make_manifest(
      "search-lambda", json{{"graph", graph_args.graph_path}}, params);
  emit_report(report, output);
  return 0;
}

int cmd_prune_samples(int argc, char** argv) {
  CLI::App app{"shrink a sampling set greedily while A stays above a floor"};
  app.name("pwgs prune-samples");
  GraphArgs graph_args;
  OmegaArgs omega_args;
  double a_min = 0.0;
  std::uint64_t seed = 0;
  std::string step_log;
  std::string output;
  graph_args.attach(app);
  omega_args.attach(app);
  app.add_option("--a-min", a_min, "lower frame bound floor")->required();
  app.add_option("--seed", seed, "recorded in the manifest");
  app.add_option("--step-log", step_log, "write per-step JSON lines here");
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  Spectrum spec = graph_args.spectrum(g);
  double omega = omega_args.resolve(spec);
  auto result = pwgs::prune_sampling_set(spec, Bandwidth(omega), a_min, seed);
  if (!step_log.empty()) {
    std::string lines;
    for (const auto& step : pwgs::io::search_log_to_json(result.log))
      lines += step.dump() + "\n";
    pwgs::io::save_text(lines, step_log);
  }

  json report = pwgs::io::frame_report_to_json(result.report);
  report["schema"] = 1;
  report["steps"] = static_cast<int>(result.log.size());
  report["graph_hash"] = pwgs::io::graph_hash(g);
  json params = graph_args.params();
  params.update(omega_args.params(omega));
  params["a_min"] = a_min;
  params["seed"] = seed;
  report["manifest"] = make_manifest(
      "prune-samples", json{{"graph", graph_args.graph_path}}, params);
  emit_report(report, output);
  return 0;
}

int cmd_verify(int argc, char** argv) {
  CLI::App app{"run the numerical verification suite on a graph"};
  app.name("pwgs verify");
  GraphArgs graph_args;
  OmegaArgs omega_args;
  pwgs::VerifyOptions opts;
  std::string output;
  graph_args.attach(app);
  omega_args.attach(app);
  app.add_option("--seeds", opts.seeds, "trials per randomized check");
  app.add_option("--base-seed", opts.base_seed, "seed offset for all trials");
  app.add_option("--slack", opts.slack,
                 "multiplicative slack for norm comparisons (default 1e-9)");
  app.add_option("--rank-tol", opts.rank_tol,
                 "lower frame bound threshold (default 1e-10)");
  app.add_option("-o,--output", output, "output file (default stdout)");
  parse_or_report(app, argc, argv);

  Graph g = graph_args.load();
  Spectrum spec = graph_args.spectrum(g);
  opts.omega = omega_args.resolve(spec);
  auto verify_report = pwgs::run_verification(g, spec, opts);

  json checks = json::array();
  for (const auto& c : verify_report.checks)
    checks.push_back(json{
        {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json report{{"schema", 1},
              {"all_passed", verify_report.all_passed},
              {"checks", std::move(checks)},
              {"graph_hash", pwgs::io::graph_hash(g)}};
  json params = graph_args.params();
  params.update(omega_args.params(opts.omega));
  params["seeds"] = opts.seeds;
  params["base_seed"] = opts.base_seed;
  params["slack"] = opts.slack;
  params["rank_tol"] = opts.rank_tol;
  report["manifest"] = make_manifest(
      "verify", json{{"graph", graph_args.graph_path}}, params);
  emit_report(report, output);
  return verify_report.all_passed ? 0 : 3;
}

constexpr const char* kUsage =
    "usage: pwgs <subcommand> [options]\n"
    "\n"
    "subcommands:\n"
    "  gen             generate a graph from a named family\n"
    "  spectrum        eigenvalues of the normalized Laplacian\n"
    "  certify-lambda  smallest Poincare constant of a subset, with witness\n"
    "  frame           frame bounds of a sampling set\n"
    "  reconstruct     least-squares reconstruction from samples\n"
    "  search-lambda   greedy search for a removable lambda-set\n"
    "  prune-samples   greedy shrink of a sampling set\n"
    "  verify          numerical verification suite (exit 3 on violation)\n"
    "\n"
    "run `pwgs <subcommand> --help` for options\n";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 64;
  }
  std::string cmd = argv[1];
  if (cmd == "-h" || cmd == "--help" || cmd == "help") {
    std::cout << kUsage;
    return 0;
  }

  using Handler = int (*)(int, char**);
  Handler handler = nullptr;
  if (cmd == "gen") handler = cmd_gen;
  else if (cmd == "spectrum") handler = cmd_spectrum;
  else if (cmd == "certify-lambda") handler = cmd_certify_lambda;
  else if (cmd == "frame") handler = cmd_frame;
  else if (cmd == "reconstruct") handler = cmd_reconstruct;
  else if (cmd == "search-lambda") handler = cmd_search_lambda;
  else if (cmd == "prune-samples") handler = cmd_prune_samples;
  else if (cmd == "verify") handler = cmd_verify;

  if (!handler) {
    print_error("UnknownSubcommand", "unknown subcommand \"" + cmd + "\"");
    std::cerr << kUsage;
    return 64;
  }

  try {
    return handler(argc - 1, argv + 1);
  } catch (const ExitSuccess&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error("InvalidParameter", e.what());
    return 2;
  } catch (const Error& e) {
    print_error(pwgs::error_code_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return 2;
  }
}
