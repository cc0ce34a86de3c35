#include "pwgs/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

namespace pwgs {

namespace {

std::vector<int> with_vertex(const VertexSet& s, int v) {
  std::vector<int> members = s.members();
  members.push_back(v);
  return members;
}

}  // namespace

LambdaSearchResult greedy_lambda_set(const Graph& g, const Spectrum& spec,
                                     const SearchConfig& cfg) {
  const int n = g.vertex_count();
  if (n != spec.n())
    fail(ErrorCode::DimensionMismatch,
         "graph and spectrum disagree on vertex count");
  if (!(cfg.omega > 0.0))
    fail(ErrorCode::InvalidParameter,
         "search needs omega > 0, got " + std::to_string(cfg.omega));
  if (cfg.max_iterations < 1)
    fail(ErrorCode::InvalidParameter, "max_iterations must be >= 1");

  double cap = cfg.lambda_cap > 0.0 ? cfg.lambda_cap : (1.0 - 1e-3) / cfg.omega;
  if (!(cap * cfg.omega < 1.0))
    fail(ErrorCode::InvalidParameter,
         "lambda_cap * omega = " + std::to_string(cap * cfg.omega) +
             " must stay below 1 for the resulting set to certify stability");

  LambdaSearchResult result;
  VertexSet s;
  LambdaCertificate best_cert;
  int step = 0;

  // Seed: a maximal independent set has lambda_min <= 1, so it is admissible
  // whenever the cap allows 1; it can never be all of V on a connected
  // graph with n >= 2.
  if (cap > 1.0 && n >= 2) {
    VertexSet mis = maximal_independent_set(g);
    LambdaCertificate cert = minimal_lambda(g, mis);
    if (cert.lambda_min < cap) {
      s = mis;
      best_cert = cert;
      for (int v : mis.members())
        result.log.push_back({step++, v, cert.lambda_min, mis.size()});
    }
  }

  if (s.empty()) {
    // best singleton, ties to the smallest id
    int best_v = -1;
    double best_lambda = std::numeric_limits<double>::infinity();
    LambdaCertificate cert;
    for (int v = 0; v < n && n >= 2; ++v) {
      LambdaCertificate c = minimal_lambda(g, VertexSet({v}));
      if (c.lambda_min < best_lambda) {
        best_lambda = c.lambda_min;
        best_v = v;
        cert = std::move(c);
      }
    }
    if (best_v < 0 || best_lambda >= cap)
      fail(ErrorCode::NoAdmissibleSet,
           "no single vertex satisfies lambda_min < " + std::to_string(cap));
    s = VertexSet({best_v});
    best_cert = std::move(cert);
    result.log.push_back({step++, best_v, best_lambda, 1});
  }

  // Greedy growth: among vertices whose addition keeps the set a proper
  // subset, take the one with the smallest resulting lambda_min (strict
  // improvement over later candidates, so ties go to the smallest id).
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    int best_v = -1;
    double best_lambda = std::numeric_limits<double>::infinity();
    LambdaCertificate best_next;
    for (int v = 0; v < n; ++v) {
      if (s.contains(v) || s.size() + 1 >= n) continue;
      LambdaCertificate c = minimal_lambda(g, VertexSet(with_vertex(s, v)));
      if (c.lambda_min < best_lambda) {
        best_lambda = c.lambda_min;
        best_v = v;
        best_next = std::move(c);
      }
    }
    if (best_v < 0 || best_lambda >= cap) break;
    s = VertexSet(with_vertex(s, best_v));
    best_cert = std::move(best_next);
    result.log.push_back({step++, best_v, best_lambda, s.size()});
  }

  result.certificate = std::move(best_cert);
  return result;
}

PruneResult prune_sampling_set(const Spectrum& spec, Bandwidth omega,
                               double a_min, std::uint64_t seed) {
  (void)seed;  // recorded by callers; pruning is deterministic
  if (!(a_min > 0.0))
    fail(ErrorCode::InvalidParameter,
         "a_min must be positive, got " + std::to_string(a_min));
  if (a_min > 1.0)
    fail(ErrorCode::InfeasibleTarget,
         "even sampling every vertex only reaches lower bound 1 < a_min = " +
             std::to_string(a_min));

  const int n = spec.n();
  VertexSet w = VertexSet::full(n);
  PruneResult result;
  result.report = frame_bounds(spec, omega, w);
  int step = 0;

  const int k = result.report.pw_dim;
  while (w.size() > k) {
    int best_v = -1;
    double best_a = -1.0;
    FrameReport best_report;
    for (int v : w.members()) {
      VertexSet candidate(
          [&] {
            std::vector<int> members;
            members.reserve(w.size() - 1);
            for (int u : w.members())
              if (u != v) members.push_back(u);
            return members;
          }());
      FrameReport report = frame_bounds(spec, omega, candidate);
      if (report.lower_bound > best_a) {
        best_a = report.lower_bound;
        best_v = v;
        best_report = std::move(report);
      }
    }
    if (best_v < 0 || best_a < a_min) break;
    w = best_report.sampling_set;
    result.report = std::move(best_report);
    result.log.push_back({step++, best_v, result.report.lower_bound, w.size()});
  }
  return result;
}

}  // namespace pwgs
