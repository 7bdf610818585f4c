#include <doctest.h>

#include <cmath>

#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/tight_span.hpp"

using namespace mfill;

TEST_CASE("tight span of two points is a segment") {
  FiniteMetricSpace two({"a", "b"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  TightSpanResult ts = tight_span(two, Rat(1, 8));
  // Anchors at distance 1; every sample lies on the segment between them:
  // d(h_a, f) + d(f, h_b) = 1.
  for (std::size_t i = 0; i < ts.functions.size(); ++i) {
    CHECK(is_extremal_function(two, ts.functions[i]));
    CHECK(ts.space.distance(ts.anchor_indices[0], i) +
              ts.space.distance(i, ts.anchor_indices[1]) ==
          Rat(1));
  }
  CHECK(ts.space.distance(ts.anchor_indices[0], ts.anchor_indices[1]) == Rat(1));
  // Coverage at resolution 1/8: at least 8 distinct samples.
  CHECK(ts.functions.size() >= 8);
}

TEST_CASE("tight span of a 3-point space is the (1,2,3) tripod") {
  FiniteMetricSpace m({"a", "b", "c"}, {{Rat(0), Rat(3), Rat(4)},
                                        {Rat(3), Rat(0), Rat(5)},
                                        {Rat(4), Rat(5), Rat(0)}});
  TightSpanResult ts = tight_span(m, Rat(1, 4));
  std::vector<Rat> steiner = {Rat(1), Rat(2), Rat(3)};
  std::size_t si = ts.functions.size();
  for (std::size_t i = 0; i < ts.functions.size(); ++i)
    if (ts.functions[i] == steiner) si = i;
  REQUIRE(si < ts.functions.size());
  CHECK(ts.space.distance(ts.anchor_indices[0], si) == Rat(1));
  CHECK(ts.space.distance(ts.anchor_indices[1], si) == Rat(2));
  CHECK(ts.space.distance(ts.anchor_indices[2], si) == Rat(3));
  // Everything lies on one of the three legs: d(h_i, f) + d(f, s) = leg_i
  // for some i (tripod geometry).
  for (std::size_t i = 0; i < ts.functions.size(); ++i) {
    bool on_leg = false;
    for (int leg = 0; leg < 3; ++leg)
      if (ts.space.distance(ts.anchor_indices[static_cast<std::size_t>(leg)], i) +
              ts.space.distance(i, si) ==
          steiner[static_cast<std::size_t>(leg)])
        on_leg = true;
    CHECK(on_leg);
  }
}

TEST_CASE("tight span of a generic 4-point space: rectangle plus legs") {
  // d chosen with three distinct pairings.
  std::vector<std::vector<Rat>> d = {{Rat(0), Rat(4), Rat(5), Rat(7)},
                                     {Rat(4), Rat(0), Rat(7), Rat(7)},
                                     {Rat(5), Rat(7), Rat(0), Rat(4)},
                                     {Rat(7), Rat(7), Rat(4), Rat(0)}};
  FiniteMetricSpace m({"a", "b", "c", "d"}, d);
  TightSpanResult ts = tight_span(m, Rat(1, 4));
  for (const auto& f : ts.functions) CHECK(is_extremal_function(m, f));
  // The anchors are an isometric copy of the input.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(ts.space.distance(ts.anchor_indices[i], ts.anchor_indices[j]) ==
            m.distance(i, j));

  // Corner functions g_i(x_j) = d_ij - leg_i with the Gromov-product legs.
  std::vector<Rat> legs(4);
  for (std::size_t i = 0; i < 4; ++i) {
    Rat best(-1);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        if (j == i || k == i || j == k) continue;
        Rat g = (m.distance(i, j) + m.distance(i, k) - m.distance(j, k)) / 2;
        if (best < 0 || g < best) best = g;
      }
    legs[i] = best;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Rat> corner(4);
    for (std::size_t j = 0; j < 4; ++j)
      corner[j] = i == j ? legs[i] : m.distance(i, j) - legs[i];
    CHECK(is_extremal_function(m, corner));
    // The anchor is at distance exactly leg_i from its corner.
    Rat dist = 0;
    for (std::size_t j = 0; j < 4; ++j)
      dist = std::max(dist, rat_abs(corner[j] - m.distance(i, j)));
    CHECK(dist == legs[i]);
  }

  // Brute-force oracle: grid-search extremal functions, then check they
  // are covered by our samples.
  std::vector<std::vector<Rat>> oracle;
  Rat dmax = m.diameter();
  // Scan f over a coarse grid in the rectangle part only: f determined by
  // f(a), f(b) for extremal functions of 4 points in generic position.
  for (Rat fa = 0; fa <= dmax; fa += Rat(1, 2))
    for (Rat fb = 0; fb <= dmax; fb += Rat(1, 2)) {
      std::vector<Rat> f = {fa, fb, Rat(0), Rat(0)};
      // Complete minimally in the last two coordinates, then check.
      f[2] = std::max({Rat(0), m.distance(2, 0) - fa, m.distance(2, 1) - fb});
      f[3] = std::max({Rat(0), m.distance(3, 0) - fa, m.distance(3, 1) - fb,
                       m.distance(3, 2) - f[2]});
      if (is_extremal_function(m, f)) oracle.push_back(f);
    }
  CHECK(!oracle.empty());
  for (const auto& f : oracle) {
    Rat nearest(-1);
    for (const auto& g : ts.functions) {
      Rat dd = 0;
      for (std::size_t j = 0; j < 4; ++j) dd = std::max(dd, rat_abs(f[j] - g[j]));
      if (nearest < 0 || dd < nearest) nearest = dd;
    }
    CHECK(nearest <= Rat(3, 4));  // oracle points are covered at ~resolution
  }
}

TEST_CASE("tight span cap") {
  FiniteMetricSpace m = random_metric(13, 5);
  CHECK_THROWS_AS(tight_span(m, Rat(1, 2)), CapError);
}

TEST_CASE("thickening of a path graph") {
  Graph path = path_graph(9);
  ThickeningResult th = delta_thickening(path, Rat(1, 2));
  FiniteMetricSpace base = graph_metric(path);
  // Original distances preserved exactly.
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j)
      CHECK(th.space.distance(th.original_indices[i], th.original_indices[j]) ==
            base.distance(i, j));
  // Triangle inequality of the glued metric, exhaustively.
  th.space.validate();
  // Hausdorff distance to the original vertex set <= 64 delta = 32.
  Rat worst = 0;
  for (std::size_t p = 0; p < th.space.size(); ++p) {
    Rat best(-1);
    for (std::size_t i = 0; i < 9; ++i) {
      Rat dd = th.space.distance(p, th.original_indices[i]);
      if (best < 0 || dd < best) best = dd;
    }
    worst = std::max(worst, best);
  }
  CHECK(worst <= Rat(32));
  // Thickening a tree stays 64*delta-close to 0-hyperbolic.
  CHECK(four_point_delta(th.space) <= Rat(32));
}

TEST_CASE("thickening rejects balls above the envelope desk cap") {
  // 8*delta-balls on a long path exceed 12 points.
  Graph path = path_graph(30);
  CHECK_THROWS_AS(delta_thickening(path, Rat(2)), CapError);
}

TEST_CASE("thickening of a single edge matches the segment envelope") {
  Graph edge({"a", "b"}, {{0, 1, Rat(1)}});
  ThickeningResult th = delta_thickening(edge, Rat(2));
  // One net point, one envelope: a discretized segment of length 1.
  CHECK(th.net.size() == 1);
  CHECK(th.space.distance(th.original_indices[0], th.original_indices[1]) == Rat(1));
  for (std::size_t p = 0; p < th.space.size(); ++p)
    CHECK(th.space.distance(p, th.original_indices[0]) +
              th.space.distance(p, th.original_indices[1]) ==
          Rat(1));
}
