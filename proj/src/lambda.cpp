#include "pwgs/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace pwgs {

namespace {

constexpr double kLambdaCheckSlack = 1e-9;  // relative slack on comparisons

// Columns of the normalized Laplacian indexed by S, built directly from the
// adjacency structure (column v has 1 at v and -1/sqrt(d(u)d(v)) at u ~ v).
Eigen::MatrixXd restricted_columns(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, s.size());
  int j = 0;
  for (int v : s.members()) {
    B(v, j) = 1.0;
    for (int u : g.neighbors(v))
      B(u, j) = -1.0 / std::sqrt(double(g.degree(u)) * double(g.degree(v)));
    ++j;
  }
  return B;
}

// Flip sign so the entry of largest magnitude is positive (first such entry
// on ties); keeps witnesses deterministic.
void canonicalize_sign(Eigen::VectorXd& w) {
  int idx = 0;
  w.cwiseAbs().maxCoeff(&idx);
  if (w(idx) < 0.0) w = -w;
}

}  // namespace

LambdaCertificate minimal_lambda(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  s.check_range(n);
  if (s.empty())
    fail(ErrorCode::EmptySet, "lambda certification needs a nonempty subset");
  if (s.size() == n)
    fail(ErrorCode::NoFiniteLambda,
         "the full vertex set admits no finite lambda (the Laplacian kernel "
         "is supported everywhere)");

  Eigen::MatrixXd B = restricted_columns(g, s);

  // JacobiSVD is the more accurate choice at certification scale; switch to
  // the divide-and-conquer solver once the subset gets large.
  Eigen::VectorXd sv;
  Eigen::MatrixXd V;
  if (s.size() <= 32) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeThinV);
    sv = svd.singularValues();
    V = svd.matrixV();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeThinV);
    sv = svd.singularValues();
    V = svd.matrixV();
  }
  const int last = static_cast<int>(sv.size()) - 1;
  const double sigma_min = sv(last);
  if (!(sigma_min > 0.0))
    fail(ErrorCode::NoFiniteLambda,
         "restricted Laplacian is numerically singular on the subset");

  Eigen::VectorXd coeffs = V.col(last);
  canonicalize_sign(coeffs);
  Eigen::VectorXd witness = Eigen::VectorXd::Zero(n);
  int j = 0;
  for (int v : s.members()) witness(v) = coeffs(j++);

  LambdaCertificate cert;
  cert.subset = s;
  cert.sigma_min = sigma_min;
  cert.lambda_min = 1.0 / sigma_min;
  cert.witness = std::move(witness);
  return cert;
}

LambdaCheck is_lambda_set(const Graph& g, const VertexSet& s, double lambda) {
  if (!(lambda > 0.0))
    fail(ErrorCode::InvalidParameter,
         "lambda must be positive, got " + std::to_string(lambda));
  LambdaCheck check;
  check.certificate = minimal_lambda(g, s);
  check.holds =
      check.certificate.lambda_min <= lambda * (1.0 + kLambdaCheckSlack);
  return check;
}

LambdaCheck check_independent_lemma(const Graph& g, const VertexSet& s) {
  s.check_range(g.vertex_count());
  for (int v : s.members())
    for (int u : g.neighbors(v))
      if (s.contains(u))
        fail(ErrorCode::NotIndependent,
             "vertices " + std::to_string(v) + " and " + std::to_string(u) +
                 " are adjacent; the set is not independent");
  return is_lambda_set(g, s, 1.0);
}

UnionLambdaBound union_lambda_bound(const Graph& g,
                                    const std::vector<VertexSet>& subsets,
                                    const std::vector<double>& lambdas) {
  if (subsets.empty())
    fail(ErrorCode::InvalidParameter, "union rule needs at least one subset");
  if (subsets.size() != lambdas.size())
    fail(ErrorCode::InvalidParameter,
         "got " + std::to_string(subsets.size()) + " subsets but " +
             std::to_string(lambdas.size()) + " lambdas");

  // pairwise disjoint closures <=> no vertex appears in two closures
  std::vector<int> all_closure;
  for (const auto& s : subsets) {
    auto bc = boundary_and_closure(g, s);
    all_closure.insert(all_closure.end(), bc.closure.members().begin(),
                       bc.closure.members().end());
  }
  std::sort(all_closure.begin(), all_closure.end());
  if (std::adjacent_find(all_closure.begin(), all_closure.end()) !=
      all_closure.end())
    fail(ErrorCode::OverlappingClosures,
         "subset closures overlap; the union rule does not apply");

  UnionLambdaBound out;
  std::vector<int> merged;
  for (size_t j = 0; j < subsets.size(); ++j) {
    auto check = is_lambda_set(g, subsets[j], lambdas[j]);
    if (!check.holds)
      fail(ErrorCode::InvalidParameter,
           "subset " + std::to_string(j) + " is not a lambda-set for lambda=" +
               std::to_string(lambdas[j]) + " (lambda_min=" +
               std::to_string(check.certificate.lambda_min) + ")");
    out.lambda_union = std::max(out.lambda_union, lambdas[j]);
    merged.insert(merged.end(), subsets[j].members().begin(),
                  subsets[j].members().end());
  }

  auto union_check = is_lambda_set(g, VertexSet(std::move(merged)),
                                   out.lambda_union);
  out.verified = union_check.holds;
  out.union_certificate = std::move(union_check.certificate);
  return out;
}

}  // namespace pwgs
