#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pwgs/frames.hpp"
#include "pwgs/graph.hpp"
#include "pwgs/spectral.hpp"

namespace pwgs {

struct VerifyOptions {
  double omega = 0.0;  // required, > 0
  int seeds = 50;      // trials per randomized check
  std::uint64_t base_seed = 1;
  double slack = kVerifySlack;
  double rank_tol = kRankTol;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed = true;
};

// End-to-end numerical verification of the sampling theory on one graph:
// spectral invariants, the Bernstein-type inequality, the independent-set
// and union rules for lambda-sets, the stability theorem on searched sets
// (norm chain and Gram-level bound), the converse lambda bound on random
// sampling sets, and exact reconstruction.  Randomized checks run
// opts.seeds trials each, fanned out across worker threads.
VerifyReport run_verification(const Graph& g, const Spectrum& spec,
                              const VerifyOptions& opts);

}  // namespace pwgs
