#include <doctest.h>

#include <cmath>

#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/hlambda.hpp"

using namespace mfill;

TEST_CASE("stokes sum with coordinate witnesses on the grid boundary") {
  const int r = 8;
  Graph g = grid_graph(r + 1);
  Loop loop = grid_boundary_loop(r + 1);
  std::vector<double> f(g.size()), pi(g.size());
  for (std::size_t j = 0; j <= r; ++j)
    for (std::size_t i = 0; i <= r; ++i) {
      f[j * (r + 1) + i] = std::min(1.0, static_cast<double>(i) / r);
      pi[j * (r + 1) + i] = static_cast<double>(j) / r;
    }
  // The discrete Green sum of x dy over the square boundary equals 1.
  double t = stokes_sum(g, loop, f, pi);
  CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t >= 0.5);
  // Invariance under adding constants.
  std::vector<double> f2 = f, pi2 = pi;
  for (double& x : f2) x += 3.25;
  for (double& x : pi2) x -= 1.5;
  CHECK(stokes_sum(g, loop, f2, pi2) == doctest::Approx(t).epsilon(1e-9));
}

TEST_CASE("backtracking tree loops have vanishing Stokes sums") {
  Graph tree = binary_tree_graph(5);
  Loop loop = tree_out_and_back_loop(5);
  std::vector<double> f(tree.size()), pi(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v) {
    f[v] = std::sin(static_cast<double>(v));
    pi[v] = std::cos(static_cast<double>(3 * v + 1));
  }
  CHECK(stokes_sum(tree, loop, f, pi) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("h_lambda estimates separate grids from trees") {
  const double lambda = 8;
  for (int r : {8, 16}) {
    Graph g = grid_graph(static_cast<std::size_t>(r + 1));
    Loop loop = grid_boundary_loop(static_cast<std::size_t>(r + 1));
    HLambdaResult res = h_lambda_estimate(g, loop, lambda, r, 3);
    CHECK(res.value >= 0.4);
    CHECK(res.value <= res.cap * (1 + 1e-9));
    // Witnesses are genuinely feasible.
    double lip = lambda / r;
    for (const auto& e : g.edges()) {
      CHECK(std::fabs(res.witnesses.f[e.u] - res.witnesses.f[e.v]) <=
            lip * rat_to_double(e.w) * (1 + 1e-9));
      CHECK(std::fabs(res.witnesses.pi[e.u] - res.witnesses.pi[e.v]) <=
            lip * rat_to_double(e.w) * (1 + 1e-9));
    }
  }
  for (int r : {8, 16}) {
    Graph g = binary_tree_graph(8);
    Loop loop = tree_out_and_back_loop(8);
    HLambdaResult res = h_lambda_estimate(g, loop, lambda, r, 3);
    CHECK(res.value <= 0.05);
  }
}

TEST_CASE("loop validation") {
  Graph g = grid_graph(4);
  Loop bad;
  bad.vertices = {0, 5};  // not an edge
  CHECK_THROWS_AS(h_lambda_estimate(g, bad, 8, 8, 2), ValidationError);
  // Lipschitz budget: a long loop with tiny lambda*r is rejected.
  Loop boundary = grid_boundary_loop(4);
  CHECK_THROWS_AS(h_lambda_estimate(g, boundary, 1, 1, 2), ValidationError);
}
