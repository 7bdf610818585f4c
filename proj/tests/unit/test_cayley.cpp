#include <doctest.h>

#include <cmath>

#include "mfill/cayley.hpp"
#include "mfill/errors.hpp"
#include "mfill/metric_space.hpp"

using namespace mfill;

TEST_CASE("presentation validation") {
  GroupPresentation bad{{"a", "a"}, {}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  GroupPresentation unknown{{"a"}, {"abA"}};
  CHECK_THROWS_AS(unknown.validate(), ValidationError);  // unbalanced alphabet
  GroupPresentation unreduced{{"a", "b"}, {"aAb"}};
  CHECK_THROWS_AS(unreduced.validate(), ValidationError);
  GroupPresentation ok{{"a", "b"}, {"abAB"}};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("radius zero ball is a single vertex") {
  GroupPresentation z2{{"a", "b"}, {"abAB"}};
  Graph ball = cayley_ball(z2, 0);
  CHECK(ball.size() == 1);
  CHECK(ball.labels()[0] == "e");
}

TEST_CASE("Z^2 lattice balls") {
  GroupPresentation z2{{"a", "b"}, {"abAB"}};
  for (int r = 0; r <= 5; ++r) {
    Graph ball = cayley_ball(z2, r);
    CHECK(ball.size() == static_cast<std::size_t>(2 * r * r + 2 * r + 1));
  }
  // Word metric sanity at radius 3: the graph metric matches |x| + |y|.
  Graph ball = cayley_ball(z2, 3);
  CHECK(ball.size() == 25);
  FiniteMetricSpace m = graph_metric(ball);
  std::size_t e = m.index_of("e");
  Rat maxd = 0;
  for (std::size_t v = 0; v < m.size(); ++v) maxd = std::max(maxd, m.distance(e, v));
  CHECK(maxd == Rat(3));
}

TEST_CASE("free group balls") {
  GroupPresentation f2{{"a", "b"}, {}};
  for (int r = 0; r <= 5; ++r) {
    Graph ball = cayley_ball(f2, r);
    std::size_t expect =
        r == 0 ? 1 : static_cast<std::size_t>(1 + 2 * (std::pow(3, r) - 1));
    CHECK(ball.size() == expect);
  }
  CHECK(cayley_ball(f2, 2).size() == 17);
  // Tree: zero hyperbolicity.
  CHECK(four_point_delta(graph_metric(cayley_ball(f2, 3))) == Rat(0));
}

TEST_CASE("torsion and shortlex determinism") {
  // Z/4 = <a | aaaa>: ball of radius 2 holds {e, a, A, aa}.
  GroupPresentation z4{{"a"}, {"aaaa"}};
  Graph ball = cayley_ball(z4, 2);
  CHECK(ball.size() == 4);
  Graph again = cayley_ball(z4, 2);
  CHECK(ball.labels() == again.labels());
  // Shortlex labels: identity first, then length-1 words.
  CHECK(ball.labels()[0] == "e");
  CHECK(ball.labels()[1] == "a");
  // The 4-cycle structure: every vertex has degree 2.
  for (std::size_t v = 0; v < 4; ++v)
    CHECK(ball.adjacency()[v].size() == 2);
  // Cap errors surface as CapError.
  GroupPresentation f3{{"a", "b", "c"}, {}};
  CHECK_THROWS_AS(cayley_ball(f3, 8, 500), CapError);
}
