#pragma once

#include "mfill/complex2.hpp"
#include "mfill/metric_space.hpp"

namespace mfill {

/// Pair of Lipschitz witness functions on the graph vertices.
struct WitnessPair {
  std::vector<double> f, pi;
  double lipschitz_bound = 0;
};

struct HLambdaResult {
  double value = 0;  // certified lower bound: an evaluated Stokes sum
  WitnessPair witnesses;
  double cap = 0;  // lambda^4 a-priori bound the value is checked against
};

/// Discrete Stokes sum of the loop's induced 1-chain:
/// T(f,pi) = sum_e coeff_e * (f(u)+f(v))/2 * (pi(v)-pi(u)).
double stokes_sum(const Graph& g, const Loop& loop, const std::vector<double>& f,
                  const std::vector<double>& pi);

/// Lower bound for the discrete H_lambda(r): maximize T(f,pi) over
/// lambda/r-Lipschitz f, pi by alternating Kantorovich steps (each step is
/// a transport problem solved by min-cost flow), warm-started from a
/// tent-shaped witness over a half geodesic. The loop must be closed, use
/// existing edges, and have length <= lambda*r.
HLambdaResult h_lambda_estimate(const Graph& g, const Loop& loop, double lambda,
                                double r, int rounds);

}  // namespace mfill
