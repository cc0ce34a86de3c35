#include "pwgs/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pwgs::io {

namespace {

json parse_json_text(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    fail(ErrorCode::InvalidParameter, origin + ": not valid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::FileReadError, "cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    fail(ErrorCode::FileReadError, "error while reading " + path);
  return buf.str();
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(ErrorCode::InvalidParameter,
         "graph JSON needs an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer())
    fail(ErrorCode::InvalidParameter, "graph JSON: \"n\" must be an integer");
  if (!j["edges"].is_array())
    fail(ErrorCode::InvalidParameter, "graph JSON: \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(ErrorCode::InvalidParameter,
           "graph JSON: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(j["n"].get<int>(), edges);
}

Graph load_graph(const std::string& path) {
  return graph_from_json(parse_json_text(read_file(path), path));
}

json vertex_set_to_json(const VertexSet& s) {
  return json{{"vertices", s.members()}};
}

VertexSet vertex_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    fail(ErrorCode::InvalidParameter,
         "vertex set JSON needs an object with a \"vertices\" array");
  std::vector<int> members;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer())
      fail(ErrorCode::InvalidParameter,
           "vertex set JSON: entries must be integers");
    members.push_back(v.get<int>());
  }
  return VertexSet(std::move(members));
}

VertexSet load_vertex_set(const std::string& path) {
  return vertex_set_from_json(parse_json_text(read_file(path), path));
}

std::string signal_csv_text(const Signal& f) {
  std::ostringstream out;
  char line[128];
  for (int v = 0; v < f.size(); ++v) {
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g\n",
                  static_cast<int>(v), f(v).real(), f(v).imag());
    out << line;
  }
  return out.str();
}

void save_signal_csv(const Signal& f, const std::string& path) {
  save_text(signal_csv_text(f), path);
}

namespace {

struct CsvRow {
  int vertex;
  double re;
  double im;
};

std::vector<CsvRow> parse_signal_rows(const std::string& path) {
  std::string text = read_file(path);
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    CsvRow row{};
    char trailing;
    int fields = std::sscanf(line.c_str(), "%d,%lf,%lf %c", &row.vertex,
                             &row.re, &row.im, &trailing);
    if (fields != 3)
      fail(ErrorCode::InvalidParameter,
           path + ":" + std::to_string(lineno) +
               ": expected \"vertex_id,real,imag\"");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Signal load_signal_csv(const std::string& path, int n) {
  Signal f = Signal::Zero(n);
  for (const auto& row : parse_signal_rows(path)) {
    if (row.vertex < 0 || row.vertex >= n)
      fail(ErrorCode::VertexOutOfRange,
           path + ": vertex " + std::to_string(row.vertex) + " outside [0, " +
               std::to_string(n) + ")");
    f(row.vertex) = {row.re, row.im};
  }
  return f;
}

Eigen::VectorXcd load_samples_csv(const std::string& path,
                                  const VertexSet& w) {
  Eigen::VectorXcd samples = Eigen::VectorXcd::Zero(w.size());
  const auto& members = w.members();
  for (const auto& row : parse_signal_rows(path)) {
    auto it = std::lower_bound(members.begin(), members.end(), row.vertex);
    if (it == members.end() || *it != row.vertex)
      fail(ErrorCode::SampleIndexMismatch,
           path + ": vertex " + std::to_string(row.vertex) +
               " is not in the sampling set");
    samples(it - members.begin()) = {row.re, row.im};
  }
  return samples;
}

std::string graph_hash(const Graph& g) {
  // FNV-1a over the decimal rendering of n and the sorted edge list
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix("n=" + std::to_string(g.vertex_count()));
  for (auto [u, v] : g.edge_list())
    mix(";" + std::to_string(u) + "-" + std::to_string(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json load_json(const std::string& path) {
  return parse_json_text(read_file(path), path);
}

void save_json(const json& j, const std::string& path) {
  save_text(j.dump(2) + "\n", path);
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::FileWriteError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out)
    fail(ErrorCode::FileWriteError, "error while writing " + path);
}

json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json spectrum_to_json(const Spectrum& spec) {
  json eigs = json::array();
  for (int i = 0; i < spec.n(); ++i) eigs.push_back(spec.eigenvalues(i));
  return json{{"eigenvalues", std::move(eigs)},
              {"omega_max", spec.omega_max},
              {"tie_tol", spec.tie_tol},
              {"solver_tolerance", spec.solver_tol}};
}

json lambda_certificate_to_json(const LambdaCertificate& cert) {
  json witness = json::array();
  for (int i = 0; i < cert.witness.size(); ++i)
    witness.push_back(cert.witness(i));
  return json{{"subset", cert.subset.members()},
              {"lambda_min", cert.lambda_min},
              {"sigma_min", cert.sigma_min},
              {"witness", std::move(witness)}};
}

json frame_report_to_json(const FrameReport& report) {
  return json{{"sampling_set", report.sampling_set.members()},
              {"omega", report.omega},
              {"pw_dim", report.pw_dim},
              {"lower_bound", report.lower_bound},
              {"upper_bound", report.upper_bound},
              {"condition", finite_or_null(report.condition)},
              {"c_omega_empirical", finite_or_null(report.c_omega_empirical)},
              {"ill_conditioned", report.ill_conditioned}};
}

json stability_to_json(const StabilityCertificate& cert) {
  return json{{"lambda_set", cert.lambda_set.members()},
              {"lambda", cert.lambda},
              {"omega", cert.omega},
              {"c_omega_theoretical", cert.c_omega_theoretical},
              {"frame_report", frame_report_to_json(cert.frame_report)},
              {"empirically_verified", cert.empirically_verified}};
}

json lambda_bound_to_json(const LambdaBoundResult& result) {
  return json{
      {"c_omega", result.c_omega},
      {"lambda_bound", result.lambda_bound},
      {"lambda_min_complement", result.lambda_min_complement},
      {"verified", result.verified},
      {"frame_report", frame_report_to_json(result.frame_report)},
      {"complement_certificate",
       lambda_certificate_to_json(result.complement_certificate)}};
}

json search_log_to_json(const std::vector<SearchStep>& log) {
  json steps = json::array();
  for (const auto& s : log)
    steps.push_back(json{{"step", s.step},
                         {"chosen_vertex", s.chosen_vertex},
                         {"value", s.lambda_min},
                         {"set_size", s.set_size}});
  return steps;
}

}  // namespace pwgs::io
