#pragma once

#include <vector>

#include <Eigen/Core>

#include "pwgs/graph.hpp"

namespace pwgs {

// Certificate that a vertex subset S satisfies the Poincare-type inequality
//   ||phi||_2 <= lambda ||L phi||_2   for every phi supported on S,
// with the smallest admissible constant lambda_min = 1 / sigma_min, where
// sigma_min is the smallest singular value of the Laplacian restricted to
// columns of S.  The witness is a unit-norm real signal supported on S that
// attains the bound: ||L witness||_2 = sigma_min.
struct LambdaCertificate {
  VertexSet subset;
  double lambda_min = 0.0;
  double sigma_min = 0.0;
  Eigen::VectorXd witness;  // length n, zero off the subset
};

// S must be a proper nonempty subset; S = V has sigma_min = 0 (the kernel
// vector is supported everywhere) and no finite lambda.
LambdaCertificate minimal_lambda(const Graph& g, const VertexSet& s);

struct LambdaCheck {
  bool holds = false;
  LambdaCertificate certificate;
};

// Does the inequality hold for this particular lambda > 0?
LambdaCheck is_lambda_set(const Graph& g, const VertexSet& s, double lambda);

// Independent sets are lambda-sets with lambda = 1: the restricted Gram
// matrix is I plus a nonnegative diagonal, so sigma_min >= 1.  Raises
// NotIndependent when two members are adjacent.
LambdaCheck check_independent_lemma(const Graph& g, const VertexSet& s);

struct UnionLambdaBound {
  double lambda_union = 0.0;  // max of the per-subset lambdas
  bool verified = false;      // re-certified directly on the union
  LambdaCertificate union_certificate;
};

// Union rule: subsets with pairwise disjoint closures combine into a
// lambda-set with the largest of the individual constants.  Each subset is
// checked against its claimed lambda first.
UnionLambdaBound union_lambda_bound(const Graph& g,
                                    const std::vector<VertexSet>& subsets,
                                    const std::vector<double>& lambdas);

}  // namespace pwgs
