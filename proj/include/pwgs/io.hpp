#pragma once

#include <string>

#include "json.hpp"
#include "pwgs/frames.hpp"
#include "pwgs/graph.hpp"
#include "pwgs/lambda.hpp"
#include "pwgs/search.hpp"
#include "pwgs/spectral.hpp"

namespace pwgs::io {

using json = nlohmann::json;

// Graph files: {"n": <int>, "edges": [[u, v], ...]}.  Edge order is
// irrelevant and unknown extra keys are ignored; loading applies the full
// build_graph validation.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
Graph load_graph(const std::string& path);

// Vertex set files: {"vertices": [...]}.
json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const json& j);
VertexSet load_vertex_set(const std::string& path);

// Signal CSV: one row per vertex, "vertex_id,real,imag"; vertices without a
// row read as 0.  Rows may appear in any order.
std::string signal_csv_text(const Signal& f);
void save_signal_csv(const Signal& f, const std::string& path);
Signal load_signal_csv(const std::string& path, int n);

// Sample CSV restricted to a sampling set: every row's vertex must belong
// to w (SampleIndexMismatch otherwise); members of w without a row read as
// 0.  Values returned in sorted-member order.
Eigen::VectorXcd load_samples_csv(const std::string& path, const VertexSet& w);

// Stable content hash of a graph (FNV-1a over n and the sorted edge list),
// as a fixed-width hex string; reports carry it so results can be matched
// to their input graph.
std::string graph_hash(const Graph& g);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);
void save_text(const std::string& text, const std::string& path);

// Report bodies (callers attach the run manifest).
json spectrum_to_json(const Spectrum& spec);
json lambda_certificate_to_json(const LambdaCertificate& cert);
json frame_report_to_json(const FrameReport& report);
json stability_to_json(const StabilityCertificate& cert);
json lambda_bound_to_json(const LambdaBoundResult& result);
json search_log_to_json(const std::vector<SearchStep>& log);

// JSON has no infinities; condition numbers and empirical constants for
// rank-deficient frames serialize as null.
json finite_or_null(double x);

}  // namespace pwgs::io
