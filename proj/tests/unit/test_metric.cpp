#include <doctest.h>

#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/metric_space.hpp"

using namespace mfill;

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}),
                  ValidationError);  // asymmetric
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}),
                  ValidationError);  // zero distance between distinct points
  CHECK_THROWS_AS(
      FiniteMetricSpace({"a", "b", "c"}, {{Rat(0), Rat(1), Rat(5)},
                                          {Rat(1), Rat(0), Rat(1)},
                                          {Rat(5), Rat(1), Rat(0)}}),
      ValidationError);  // triangle inequality
}

TEST_CASE("graph metric examples") {
  // Path a-b-c with unit weights: d(a,c) = 2.
  Graph path = path_graph(3);
  FiniteMetricSpace m = graph_metric(path);
  CHECK(m.distance(0, 2) == Rat(2));
  // 4-cycle: opposite distance 2, adjacent 1.
  FiniteMetricSpace c4 = graph_metric(cycle_graph(4));
  CHECK(c4.distance(0, 2) == Rat(2));
  CHECK(c4.distance(0, 1) == Rat(1));
  // Weighted triangle (1,2,4): the heavy edge is corrected to 3.
  Graph tri({"a", "b", "c"},
            {{0, 1, Rat(1)}, {1, 2, Rat(2)}, {0, 2, Rat(4)}});
  FiniteMetricSpace mt = graph_metric(tri);
  CHECK(mt.distance(0, 2) == Rat(3));
  CHECK(mt.distance(0, 1) == Rat(1));
  CHECK(mt.distance(1, 2) == Rat(2));
  mt.validate();  // shortest-path matrices are metrics
}

TEST_CASE("four point delta examples") {
  CHECK(four_point_delta(graph_metric(binary_tree_graph(3))) == Rat(0));
  CHECK(four_point_delta(graph_metric(path_graph(7))) == Rat(0));
  CHECK(four_point_delta(graph_metric(cycle_graph(4))) == Rat(1, 2));
  // Scaling equivariance with c = 5/2.
  FiniteMetricSpace c6 = graph_metric(cycle_graph(6));
  std::vector<std::vector<Rat>> scaled = c6.matrix();
  for (auto& row : scaled)
    for (auto& v : row) v *= Rat(5, 2);
  FiniteMetricSpace c6s(c6.labels(), scaled);
  CHECK(four_point_delta(c6s) == four_point_delta(c6) * Rat(5, 2));
}

TEST_CASE("four point delta grows on grids") {
  Rat prev(-1);
  for (std::size_t n = 3; n <= 6; ++n) {
    Rat d = four_point_delta(graph_metric(grid_graph(n)));
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("slim triangle delta") {
  CHECK(slim_triangle_delta(binary_tree_graph(3), 100000) == Rat(0));
  CHECK(slim_triangle_delta(cycle_graph(6), 100000) == Rat(1));
  // Grid growth over n in {4, 8, 16}: exhaustive at 4 and 8 (the oracle),
  // sampled at 16 where the corner seeds still find the fat triangle.
  Rat d4 = slim_triangle_delta(grid_graph(4), 100000);
  Rat d8 = slim_triangle_delta(grid_graph(8), 100000);
  Rat d16 = slim_triangle_delta(grid_graph(16), 4000);
  CHECK(d4 > 0);
  CHECK(d8 > d4);
  CHECK(d16 > d8);
  CHECK(d16 >= d8 * Rat(3, 2));  // roughly linear growth
  // Scaling equivariance of the lower bound.
  Graph c6 = cycle_graph(6);
  std::vector<Graph::Edge> scaled_edges;
  for (const auto& e : c6.edges()) scaled_edges.push_back({e.u, e.v, e.w * 2});
  Graph c6x2(c6.labels(), scaled_edges);
  CHECK(slim_triangle_delta(c6x2, 100000) == Rat(2));
}

TEST_CASE("kuratowski embedding") {
  // 2-point space at distance 5.
  FiniteMetricSpace two({"a", "b"}, {{Rat(0), Rat(5)}, {Rat(5), Rat(0)}});
  EmbeddedPointSet emb = kuratowski_embed(two, "a");
  CHECK(emb.coords[0] == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(emb.coords[1] == std::vector<Rat>{Rat(5), Rat(-5)});
  CHECK(emb.sup_distance(0, 1) == Rat(5));
  CHECK_THROWS_AS(kuratowski_embed(two, "zz"), ValidationError);

  for (int s = 0; s < 6; ++s) {
    FiniteMetricSpace m = random_metric(8, 900 + s);
    EmbeddedPointSet e = kuratowski_embed(m, m.labels()[3]);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        CHECK(e.sup_distance(i, j) == m.distance(i, j));
  }
}

TEST_CASE("separated net") {
  FiniteMetricSpace c6 = graph_metric(cycle_graph(6));
  // Tiny separation keeps everything.
  CHECK(separated_net(c6, Rat(1, 2)).size() == 6);
  // Separation beyond the diameter keeps exactly one point.
  CHECK(separated_net(c6, Rat(10)).size() == 1);
  // delta = 2: postconditions (pairwise >= 2, everything within < 2).
  std::vector<std::size_t> net = separated_net(c6, Rat(2));
  for (std::size_t a = 0; a < net.size(); ++a)
    for (std::size_t b = a + 1; b < net.size(); ++b)
      CHECK(c6.distance(net[a], net[b]) >= Rat(2));
  for (std::size_t v = 0; v < 6; ++v) {
    Rat best(-1);
    for (std::size_t z : net)
      if (best < 0 || c6.distance(v, z) < best) best = c6.distance(v, z);
    CHECK(best < Rat(2));
  }
  CHECK(net.size() == 3);  // greedy order 0, 2, 4
}
