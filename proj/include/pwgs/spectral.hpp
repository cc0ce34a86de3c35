#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Core>

#include "pwgs/graph.hpp"

namespace pwgs {

// Complex-valued vertex signal, indexed by vertex id.
using Signal = Eigen::VectorXcd;

// Bandwidth parameter omega >= 0 for the Paley-Wiener space PW_omega:
// the span of Laplacian eigenvectors with eigenvalue <= omega.
class Bandwidth {
 public:
  explicit Bandwidth(double omega);
  double omega() const { return omega_; }

 private:
  double omega_;
};

struct SpectrumOptions {
  int size_limit = 5000;         // dense eigendecomposition cutoff
  double tie_tol_factor = 1e-9;  // tie_tol = factor * max(1, omega_max)
};

// Full eigendecomposition of the normalized Laplacian.  eigenvalues are
// ascending (ties in the solver's stable order), basis columns form a real
// orthonormal eigenbasis, basis.col(i) belongs to eigenvalues(i).
// Band membership tests use eigenvalue <= omega + tie_tol so that an
// omega sitting exactly on an eigenvalue includes the whole eigenspace.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd basis;
  double omega_max = 0.0;
  double tie_tol = 0.0;
  double solver_tol = 0.0;
  int n() const { return static_cast<int>(eigenvalues.size()); }
};

// Matrix-free normalized Laplacian:
//   (L f)(v) = (1/sqrt(d(v))) * sum_{u ~ v} (f(v)/sqrt(d(v)) - f(u)/sqrt(d(u)))
Signal apply_laplacian(const Graph& g, const Signal& f);

// Dense matrix of the same operator: diagonal 1, entry (v,u) equal to
// -1/sqrt(d(v) d(u)) when v ~ u, 0 otherwise.
Eigen::MatrixXd laplacian_matrix(const Graph& g);

Spectrum compute_spectrum(const Graph& g, const SpectrumOptions& opts = {});

// Number of eigenvalues <= omega (+ tie_tol); at least 1 for omega >= 0
// since the constant-degree-weighted kernel vector always lies in band.
int pw_dimension(const Spectrum& spec, Bandwidth omega);

// Orthogonal projection of f onto PW_omega.
Signal project_pw(const Spectrum& spec, const Signal& f, Bandwidth omega);

// Projection of the vertex indicator delta_v onto PW_omega; reproducing
// kernel of the space: <f, theta_v> = f(v) for every f in PW_omega.
Signal delta_projection(const Spectrum& spec, Bandwidth omega, int v);

// Random element of PW_omega: in-band coefficients drawn i.i.d. complex
// standard normal.  Deterministic for a fixed seed.
Signal random_bandlimited(const Spectrum& spec, Bandwidth omega,
                          std::uint64_t seed);

// l2 norm of the restriction of f to the vertices in w.
double norm_on_set(const Signal& f, const VertexSet& w);

}  // namespace pwgs
