#include "pwgs/frames.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

namespace pwgs {

namespace {

// In-band eigenvector rows at the sample vertices: |W| x k.
Eigen::MatrixXd sample_rows(const Spectrum& spec, int k, const VertexSet& w) {
  Eigen::MatrixXd E(w.size(), k);
  int i = 0;
  for (int v : w.members()) E.row(i++) = spec.basis.row(v).head(k);
  return E;
}

}  // namespace

FrameReport frame_bounds(const Spectrum& spec, Bandwidth omega,
                         const VertexSet& w) {
  w.check_range(spec.n());
  if (w.empty())
    fail(ErrorCode::EmptySamplingSet, "sampling set must be nonempty");

  FrameReport report;
  report.sampling_set = w;
  report.omega = omega.omega();
  report.pw_dim = pw_dimension(spec, omega);

  Eigen::MatrixXd E = sample_rows(spec, report.pw_dim, w);
  Eigen::MatrixXd gram = E.transpose() * E;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::InvalidParameter, "Gram eigendecomposition failed");

  report.lower_bound = std::max(0.0, solver.eigenvalues()(0));
  report.upper_bound = solver.eigenvalues()(report.pw_dim - 1);
  if (report.lower_bound > 0.0) {
    report.condition = report.upper_bound / report.lower_bound;
    report.c_omega_empirical = 1.0 / std::sqrt(report.lower_bound);
  } else {
    report.condition = std::numeric_limits<double>::infinity();
    report.c_omega_empirical = std::numeric_limits<double>::infinity();
  }
  report.ill_conditioned = !(report.condition <= kConditionWarn);
  return report;
}

bool is_uniqueness_set(const Spectrum& spec, Bandwidth omega,
                       const VertexSet& w, double rank_tol) {
  return frame_bounds(spec, omega, w).lower_bound > rank_tol;
}

namespace {

// Shared setup for dual_frame / reconstruct: sample rows, Gram factor.
struct DualSetup {
  int k = 0;
  Eigen::MatrixXd E;              // |W| x k
  Eigen::LLT<Eigen::MatrixXd> llt;  // of the Gram matrix
};

DualSetup dual_setup(const Spectrum& spec, Bandwidth omega, const VertexSet& w,
                     double rank_tol) {
  FrameReport report = frame_bounds(spec, omega, w);
  if (report.lower_bound <= rank_tol)
    fail(ErrorCode::NotASamplingSet,
         "sampling set has lower frame bound " +
             std::to_string(report.lower_bound) +
             ", not invertible at rank tolerance " + std::to_string(rank_tol));
  DualSetup setup;
  setup.k = report.pw_dim;
  setup.E = sample_rows(spec, setup.k, w);
  setup.llt.compute(setup.E.transpose() * setup.E);
  if (setup.llt.info() != Eigen::Success)
    fail(ErrorCode::NotASamplingSet,
         "Gram matrix is not positive definite at working precision");
  return setup;
}

}  // namespace

std::vector<Signal> dual_frame(const Spectrum& spec, Bandwidth omega,
                               const VertexSet& w, double rank_tol) {
  auto setup = dual_setup(spec, omega, w, rank_tol);
  // Theta = E_band M^{-1} E^T, one column per sample vertex
  Eigen::MatrixXd coeffs = setup.llt.solve(setup.E.transpose());  // k x |W|
  Eigen::MatrixXd theta = spec.basis.leftCols(setup.k) * coeffs;  // n x |W|
  std::vector<Signal> duals;
  duals.reserve(w.size());
  for (int i = 0; i < w.size(); ++i) {
    Signal d(spec.n());
    d.real() = theta.col(i);
    d.imag().setZero();
    duals.push_back(std::move(d));
  }
  return duals;
}

Signal reconstruct(const Spectrum& spec, Bandwidth omega, const VertexSet& w,
                   const Eigen::VectorXcd& samples, double rank_tol) {
  if (samples.size() != w.size())
    fail(ErrorCode::SampleIndexMismatch,
         "got " + std::to_string(samples.size()) + " samples for " +
             std::to_string(w.size()) + " sample vertices");
  auto setup = dual_setup(spec, omega, w, rank_tol);
  Eigen::VectorXd cre = setup.llt.solve(setup.E.transpose() * samples.real().eval());
  Eigen::VectorXd cim = setup.llt.solve(setup.E.transpose() * samples.imag().eval());
  const auto E_band = spec.basis.leftCols(setup.k);
  Signal out(spec.n());
  out.real() = E_band * cre;
  out.imag() = E_band * cim;
  return out;
}

StabilityCertificate stability_certificate(const Graph& g,
                                           const Spectrum& spec,
                                           Bandwidth omega, const VertexSet& s,
                                           const StabilityOptions& opts) {
  const int n = g.vertex_count();
  if (n != spec.n())
    fail(ErrorCode::DimensionMismatch,
         "graph and spectrum disagree on vertex count");
  s.check_range(n);

  StabilityCertificate cert;
  cert.lambda_set = s;
  cert.omega = omega.omega();

  if (s.empty()) {
    // sampling everywhere: exact norms, c = 1
    cert.lambda = 0.0;
    cert.c_omega_theoretical = 1.0;
  } else {
    LambdaCertificate lam = minimal_lambda(g, s);  // NoFiniteLambda if s = V
    cert.lambda = lam.lambda_min;
    const double lo = cert.lambda * omega.omega();
    if (lo >= 1.0)
      fail(ErrorCode::BandTooWide,
           "lambda * omega = " + std::to_string(lo) +
               " >= 1; the stability bound needs lambda * omega < 1");
    cert.c_omega_theoretical =
        (1.0 + cert.lambda * spec.omega_max) / (1.0 - lo);
  }

  VertexSet w = s.complement(n);
  cert.frame_report = frame_bounds(spec, omega, w);

  // empirical side: the norm chain on random in-band probes, and the
  // measured constant against the theoretical one
  bool ok = cert.frame_report.c_omega_empirical <=
            cert.c_omega_theoretical * (1.0 + 1e-6);
  for (int t = 0; ok && t < opts.trials; ++t) {
    Signal f = random_bandlimited(spec, omega, opts.seed + t);
    const double full = f.norm();
    const double on_w = norm_on_set(f, w);
    ok = on_w <= full * (1.0 + opts.slack) &&
         full <= cert.c_omega_theoretical * on_w * (1.0 + opts.slack);
  }
  cert.empirically_verified = ok;
  return cert;
}

LambdaBoundResult lambda_bound_from_sampling(const Graph& g,
                                             const Spectrum& spec,
                                             Bandwidth omega,
                                             const VertexSet& w,
                                             double rank_tol) {
  if (g.vertex_count() != spec.n())
    fail(ErrorCode::DimensionMismatch,
         "graph and spectrum disagree on vertex count");
  if (omega.omega() <= 0.0)
    fail(ErrorCode::ZeroBandwidth,
         "the converse bound (1 + c) / omega needs omega > 0");

  LambdaBoundResult result;
  result.frame_report = frame_bounds(spec, omega, w);
  if (result.frame_report.lower_bound <= rank_tol)
    fail(ErrorCode::NotASamplingSet,
         "W is not a sampling set (lower frame bound " +
             std::to_string(result.frame_report.lower_bound) + ")");

  VertexSet s = w.complement(g.vertex_count());
  if (s.empty())
    fail(ErrorCode::ComplementEmpty,
         "W is the full vertex set; there is no complement to certify");

  result.c_omega = 1.0 / std::sqrt(result.frame_report.lower_bound);
  result.lambda_bound = (1.0 + result.c_omega) / omega.omega();
  result.complement_certificate = minimal_lambda(g, s);
  result.lambda_min_complement = result.complement_certificate.lambda_min;
  result.verified =
      result.lambda_min_complement <= result.lambda_bound * (1.0 + 1e-6);
  return result;
}

}  // namespace pwgs
