#pragma once

#include <cstdint>
#include <vector>

#include "pwgs/graph.hpp"
#include "pwgs/lambda.hpp"
#include "pwgs/spectral.hpp"

namespace pwgs {

// Rank threshold below which a lower frame bound counts as zero.
inline constexpr double kRankTol = 1e-10;
// Condition number past which a frame report carries a warning flag.
inline constexpr double kConditionWarn = 1e8;
// Multiplicative slack for empirical norm-chain verification.
inline constexpr double kVerifySlack = 1e-9;

// Frame bounds of {theta_v restricted to PW_omega : v in W}: with E the
// in-band eigenvector rows at W and M = E_W^T E_W its Gram matrix,
//   lower_bound = min eig(M),  upper_bound = max eig(M),
// so  A ||f||^2 <= sum_{v in W} |f(v)|^2 <= B ||f||^2  on PW_omega.
// W is a sampling (uniqueness) set exactly when lower_bound > 0.
struct FrameReport {
  VertexSet sampling_set;
  double omega = 0.0;
  int pw_dim = 0;
  double lower_bound = 0.0;      // A, clamped at 0
  double upper_bound = 0.0;      // B <= 1
  double condition = 0.0;        // B/A, +inf when A = 0
  double c_omega_empirical = 0.0;  // 1/sqrt(A), +inf when A = 0
  bool ill_conditioned = false;  // condition > kConditionWarn
};

FrameReport frame_bounds(const Spectrum& spec, Bandwidth omega,
                         const VertexSet& w);

bool is_uniqueness_set(const Spectrum& spec, Bandwidth omega,
                       const VertexSet& w, double rank_tol = kRankTol);

// Dual frame {Theta_v : v in W} on PW_omega: column v reconstructs from the
// samples,  f = sum_{v in W} f(v) Theta_v  for every f in PW_omega.
// Requires lower_bound > rank_tol.
std::vector<Signal> dual_frame(const Spectrum& spec, Bandwidth omega,
                               const VertexSet& w, double rank_tol = kRankTol);

// Least-squares reconstruction from samples listed in the order of the
// sorted members of w.  For noisy samples of f in PW_omega the error obeys
// ||reconstruct(samples) - f|| <= ||noise|| / sqrt(lower_bound).
Signal reconstruct(const Spectrum& spec, Bandwidth omega, const VertexSet& w,
                   const Eigen::VectorXcd& samples,
                   double rank_tol = kRankTol);

struct StabilityOptions {
  int trials = 100;           // random in-band probes
  std::uint64_t seed = 1;
  double slack = kVerifySlack;
};

// Certified stable sampling on W = V \ S when S is a lambda-set with
// lambda * omega < 1:
//   ||f||_W <= ||f||_2 <= c_omega ||f||_2|_W,
//   c_omega = (1 + lambda * omega_max) / (1 - lambda * omega),
// and at the Gram level lower_bound >= (1 - lambda*omega)^2 / (1 + lambda*omega_max)^2.
// The certificate records the theoretical constant next to the measured
// frame bounds and re-checks the chain on random in-band signals.
struct StabilityCertificate {
  VertexSet lambda_set;          // S, the removed vertices
  double lambda = 0.0;           // certified lambda_min of S (0 when S empty)
  double omega = 0.0;
  double c_omega_theoretical = 1.0;
  FrameReport frame_report;      // for W = complement of S
  bool empirically_verified = false;
};

// Raises BandTooWide when lambda * omega >= 1 and NoFiniteLambda when S = V.
// S may be empty: sampling everywhere is trivially stable with c = 1.
StabilityCertificate stability_certificate(const Graph& g,
                                           const Spectrum& spec,
                                           Bandwidth omega, const VertexSet& s,
                                           const StabilityOptions& opts = {});

// Converse direction: if W samples PW_omega with lower frame bound A > 0,
// its complement is a lambda-set with lambda <= (1 + c_omega) / omega where
// c_omega = 1/sqrt(A).  Returns the bound together with the complement's
// certified lambda_min.
struct LambdaBoundResult {
  double c_omega = 0.0;             // 1/sqrt(A)
  double lambda_bound = 0.0;        // (1 + c_omega) / omega
  double lambda_min_complement = 0.0;
  bool verified = false;            // lambda_min <= bound (with slack)
  FrameReport frame_report;
  LambdaCertificate complement_certificate;
};

LambdaBoundResult lambda_bound_from_sampling(const Graph& g,
                                             const Spectrum& spec,
                                             Bandwidth omega,
                                             const VertexSet& w,
                                             double rank_tol = kRankTol);

}  // namespace pwgs
