#include "pwgs/spectral.hpp"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace pwgs {

Bandwidth::Bandwidth(double omega) : omega_(omega) {
  if (!std::isfinite(omega) || omega < 0.0)
    fail(ErrorCode::InvalidParameter,
         "bandwidth must be finite and >= 0, got " + std::to_string(omega));
}

Signal apply_laplacian(const Graph& g, const Signal& f) {
  const int n = g.vertex_count();
  if (f.size() != n)
    fail(ErrorCode::DimensionMismatch,
         "signal length " + std::to_string(f.size()) +
             " does not match vertex count " + std::to_string(n));

  Eigen::VectorXd inv_sqrt_deg(n);
  for (int v = 0; v < n; ++v) inv_sqrt_deg(v) = 1.0 / std::sqrt(double(g.degree(v)));

  Signal out(n);
  for (int v = 0; v < n; ++v) {
    std::complex<double> acc = 0.0;
    for (int u : g.neighbors(v))
      acc += f(v) * inv_sqrt_deg(v) - f(u) * inv_sqrt_deg(u);
    out(v) = inv_sqrt_deg(v) * acc;
  }
  return out;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    L(v, v) = 1.0;
    for (int u : g.neighbors(v))
      L(v, u) = -1.0 / std::sqrt(double(g.degree(v)) * double(g.degree(u)));
  }
  return L;
}

Spectrum compute_spectrum(const Graph& g, const SpectrumOptions& opts) {
  const int n = g.vertex_count();
  if (n > opts.size_limit)
    fail(ErrorCode::SizeLimitExceeded,
         "graph has " + std::to_string(n) +
             " vertices, dense eigendecomposition limited to " +
             std::to_string(opts.size_limit));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(g));
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::InvalidParameter, "eigendecomposition did not converge");

  Spectrum spec;
  spec.eigenvalues = solver.eigenvalues();
  spec.basis = solver.eigenvectors();
  spec.omega_max = spec.eigenvalues(n - 1);
  spec.tie_tol = opts.tie_tol_factor * std::max(1.0, spec.omega_max);
  spec.solver_tol = Eigen::NumTraits<double>::epsilon() * n;
  return spec;
}

int pw_dimension(const Spectrum& spec, Bandwidth omega) {
  const double cut = omega.omega() + spec.tie_tol;
  int k = 0;
  while (k < spec.n() && spec.eigenvalues(k) <= cut) ++k;
  return k;
}

namespace {

// E * (E^T f) with a real E and complex f, split into components.
Signal project_onto(const Eigen::Ref<const Eigen::MatrixXd>& E,
                    const Signal& f) {
  Eigen::VectorXd re = E * (E.transpose() * f.real().eval());
  Eigen::VectorXd im = E * (E.transpose() * f.imag().eval());
  Signal out(f.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace

Signal project_pw(const Spectrum& spec, const Signal& f, Bandwidth omega) {
  if (f.size() != spec.n())
    fail(ErrorCode::DimensionMismatch,
         "signal length " + std::to_string(f.size()) +
             " does not match spectrum size " + std::to_string(spec.n()));
  const int k = pw_dimension(spec, omega);
  if (k == spec.n()) return f;
  return project_onto(spec.basis.leftCols(k), f);
}

Signal delta_projection(const Spectrum& spec, Bandwidth omega, int v) {
  if (v < 0 || v >= spec.n())
    fail(ErrorCode::VertexOutOfRange,
         "vertex " + std::to_string(v) + " outside [0, " +
             std::to_string(spec.n()) + ")");
  const int k = pw_dimension(spec, omega);
  const auto E = spec.basis.leftCols(k);
  Eigen::VectorXd theta = E * E.row(v).transpose();
  Signal out(spec.n());
  out.real() = theta;
  out.imag().setZero();
  return out;
}

Signal random_bandlimited(const Spectrum& spec, Bandwidth omega,
                          std::uint64_t seed) {
  const int k = pw_dimension(spec, omega);
  if (k == 0)
    fail(ErrorCode::EmptyBand,
         "no eigenvalue lies at or below omega = " +
             std::to_string(omega.omega()));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd cre(k), cim(k);
  for (int i = 0; i < k; ++i) {
    cre(i) = gauss(rng);
    cim(i) = gauss(rng);
  }
  const auto E = spec.basis.leftCols(k);
  Signal out(spec.n());
  out.real() = E * cre;
  out.imag() = E * cim;
  return out;
}

double norm_on_set(const Signal& f, const VertexSet& w) {
  w.check_range(static_cast<int>(f.size()));
  double sq = 0.0;
  for (int v : w.members()) sq += std::norm(f(v));
  return std::sqrt(sq);
}

}  // namespace pwgs
