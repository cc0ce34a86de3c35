#pragma once

#include <cstdint>
#include <vector>

#include "pwgs/frames.hpp"
#include "pwgs/graph.hpp"
#include "pwgs/lambda.hpp"
#include "pwgs/spectral.hpp"

namespace pwgs {

struct SearchConfig {
  double omega = 0.0;
  // What to optimize: growing the removable lambda-set and shrinking the
  // sampling complement are the same greedy loop; the field records intent.
  enum class Target { maximize_removed, minimize_samples };
  Target target = Target::maximize_removed;
  // Admissibility cap on lambda_min; defaults keep lambda * omega < 1 with
  // a small safety margin.
  double lambda_cap = 0.0;  // 0 means use (1 - 1e-3) / omega
  std::uint64_t seed = 0;   // recorded in logs; the greedy itself is
                            // deterministic (ascending-id tie breaks)
  int max_iterations = 1000;
};

struct SearchStep {
  int step = 0;
  int chosen_vertex = -1;
  double lambda_min = 0.0;  // of the set after this step
  int set_size = 0;
};

struct LambdaSearchResult {
  LambdaCertificate certificate;
  std::vector<SearchStep> log;
};

// Grow a lambda-set greedily: seed with the canonical maximal independent
// set when admissible (omega < 1 makes lambda = 1 viable), otherwise the
// best singleton; then repeatedly add the vertex that keeps lambda_min
// smallest, stopping when no addition stays under the cap.  Raises
// NoAdmissibleSet when not even a singleton passes.
LambdaSearchResult greedy_lambda_set(const Graph& g, const Spectrum& spec,
                                     const SearchConfig& cfg);

struct PruneResult {
  FrameReport report;
  std::vector<SearchStep> log;  // lambda_min field carries the bound A here
};

// Shrink a sampling set from W = V: repeatedly drop the vertex whose removal
// keeps the lower frame bound largest, while it stays >= a_min.  Raises
// InfeasibleTarget when even W = V has A < a_min (i.e. a_min > 1).
PruneResult prune_sampling_set(const Spectrum& spec, Bandwidth omega,
                               double a_min, std::uint64_t seed = 0);

}  // namespace pwgs
