#include <doctest.h>

#include <cmath>

#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/substrates.hpp"

using namespace mfill;

TEST_CASE("plane patch: extent 1 mesh 1/2 gives 8 triangles of total weight 1") {
  PlanePatch patch = plane_patch(Rat(1), Rat(1, 2));
  CHECK(patch.complex.triangles().size() == 8);
  Rat total = 0;
  for (const Rat& w : patch.complex.weights()) total += w;
  CHECK(total == Rat(1));
  CHECK(patch.complex.vertex_count() == 9);
  // Determinism.
  PlanePatch again = plane_patch(Rat(1), Rat(1, 2));
  CHECK(patch.complex.triangles() == again.complex.triangles());
  // Union-jack: even cells carry the NE diagonal, odd cells the NW one.
  CHECK(patch.complex.find_edge(patch.vertex_at(0, 0), patch.vertex_at(1, 1)).has_value());
  CHECK(patch.complex.find_edge(patch.vertex_at(2, 0), patch.vertex_at(1, 1)).has_value());
  CHECK(!patch.complex.find_edge(patch.vertex_at(1, 0), patch.vertex_at(2, 1)).has_value());
}

TEST_CASE("plane patch rejects bad parameters") {
  CHECK_THROWS_AS(plane_patch(Rat(1), Rat(1, 3) * Rat(2)), ValidationError);
  CHECK_THROWS_AS(plane_patch(Rat(100), Rat(1, 100)), CapError);
}

TEST_CASE("hyperbolic ball: degree 7 interior, exponential growth") {
  HyperbolicBall ball = hyperbolic_ball(4);
  // Ring sizes follow the {3,7} recursion: 7, 21, 56, 147.
  REQUIRE(ball.rings.size() == 4);
  CHECK(ball.rings[0].size() == 7);
  CHECK(ball.rings[1].size() == 21);
  CHECK(ball.rings[2].size() == 56);
  CHECK(ball.rings[3].size() == 147);
  // Interior vertices have degree exactly 7.
  std::vector<int> degree(ball.complex.vertex_count(), 0);
  for (const auto& [u, v] : ball.complex.edges()) {
    degree[u]++;
    degree[v]++;
  }
  std::vector<char> on_last_ring(ball.complex.vertex_count(), 0);
  for (std::size_t v : ball.rings.back()) on_last_ring[v] = 1;
  for (std::size_t v = 0; v < ball.complex.vertex_count(); ++v)
    if (!on_last_ring[v]) CHECK(degree[v] == 7);
  // dd = 0.
  for (std::size_t t = 0; t < ball.complex.triangles().size(); ++t) {
    Chain c2;
    c2.dim = 2;
    c2.add(t, Rat(1));
    CHECK(ball.complex.boundary(ball.complex.boundary(c2)).coeffs.empty());
  }
}

TEST_CASE("hyperbolic rings fill to the whole ball below them") {
  HyperbolicBall ball = hyperbolic_ball(3);
  // Ring k bounds exactly the triangles inside it (unit weights).
  Loop ring;
  ring.vertices = ball.rings[1];
  FillResult fill = min_filling_area(ball.complex, ball.complex.loop_chain(ring),
                                     FillMode::relaxed);
  CHECK(fill.area == Rat(35));  // 7 + 28 triangles inside ring 2
}

TEST_CASE("octagon loops digitize exactly") {
  PlanePatch patch = plane_patch(Rat(12), Rat(1, 2));
  long c = 12;  // lattice center (12,12): even parity
  long a = 8;
  long k = octagon_regular_cut(a, 0);
  CHECK((2 * a - k) % 2 == 0);
  Loop loop = octagon_loop(patch, c, c, a, k);
  // Loop length: 4 straight sides of 2(a-k) steps of h, plus 4 cuts of
  // k diagonal steps of h*sqrt(2).
  double h = 0.5;
  double expect = (8.0 * (a - k) + 4.0 * k * std::sqrt(2.0)) * h;
  CHECK(patch.complex.loop_length_double(loop) == doctest::Approx(expect).epsilon(1e-12));
  // Its filling is the enclosed area: (4a^2 - 2k^2) lattice cells of h^2.
  FillResult fill = min_filling_area(patch.complex, patch.complex.loop_chain(loop),
                                     FillMode::relaxed);
  CHECK(fill.area == Rat(4 * a * a - 2 * k * k) * Rat(1, 4));
}

TEST_CASE("discrete circle region: area within 5% of pi r^2 (r=5, h=1)") {
  PlanePatch patch = plane_patch(Rat(14), Rat(1));
  // Odd-parity center allows the circle-like octagon with c = 2a - k odd.
  long ci = 7, cj = 6;
  long a = 5, k = 3;
  Loop loop = octagon_loop(patch, ci, cj, a, k);
  FillResult fill = min_filling_area(patch.complex, patch.complex.loop_chain(loop),
                                     FillMode::relaxed);
  double area = rat_to_double(fill.area);
  double target = M_PI * 25.0;
  CHECK(std::fabs(area - target) / target <= 0.05);
}

TEST_CASE("centroid disk region boundary is a single loop") {
  PlanePatch patch = plane_patch(Rat(12), Rat(1, 2));
  Loop loop = circle_loop(patch, 6.0, 6.0, 3.0);
  CHECK(loop.vertices.size() >= 24);
  Chain z = patch.complex.loop_chain(loop);
  FillResult fill = min_filling_area(patch.complex, z, FillMode::relaxed);
  // Enclosed area close to pi r^2 (the centroid rule is nearly unbiased).
  CHECK(rat_to_double(fill.area) == doctest::Approx(M_PI * 9.0).epsilon(0.05));
}

TEST_CASE("cylinder and octahedron metrics are present") {
  CHECK(octahedron().has_vertex_metric());
  CHECK(cylinder_complex(6, Rat(2), true).has_vertex_metric());
  CHECK_THROWS_AS(cylinder_complex(2, Rat(1), false), ValidationError);
}
