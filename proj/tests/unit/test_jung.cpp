#include <doctest.h>

#include <cmath>

#include "mfill/fixtures.hpp"
#include "mfill/jung.hpp"
#include "mfill/rng.hpp"

using namespace mfill;

namespace {

// Test-only brute-force alternative: coarse grid over normalized triangles
// (0, 2u, p3), evaluating the exact Chebyshev radius. A lower-bound oracle.
double jung_grid_oracle(const PolygonalNorm& norm, int boundary_steps, int grid) {
  const auto& verts = norm.vertices();
  const std::size_t n = verts.size();
  double best = 1.0;
  Rat x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const Vec2& v : verts) {
    x0 = std::min(x0, v.x * 2);
    x1 = std::max(x1, v.x * 2);
    y0 = std::min(y0, v.y * 2);
    y1 = std::max(y1, v.y * 2);
  }
  for (std::size_t e = 0; e < n / 2; ++e)
    for (int s = 0; s < boundary_steps; ++s) {
      Rat t(s, boundary_steps);
      Vec2 u = verts[e] + (verts[(e + 1) % n] - verts[e]) * t;
      Vec2 p2 = u * Rat(2);
      for (int gx = 0; gx <= grid; ++gx)
        for (int gy = 0; gy <= grid; ++gy) {
          Vec2 p3(x0 + (x1 - x0) * Rat(gx, grid), y0 + (y1 - y0) * Rat(gy, grid));
          if (norm.gauge(p3) > 2 || norm.gauge(p3 - p2) > 2) continue;
          Rat r = chebyshev_radius(norm, {Vec2(Rat(0), Rat(0)), p2, p3});
          best = std::max(best, rat_to_double(r));
        }
    }
  return best;
}

}  // namespace

TEST_CASE("chebyshev radius basics") {
  PolygonalNorm square = square_norm();
  // Two points: radius is half the distance; third point coincides.
  Rat r = chebyshev_radius(square, {Vec2(Rat(0), Rat(0)), Vec2(Rat(2), Rat(0)),
                                    Vec2(Rat(2), Rat(0))});
  CHECK(r == Rat(1));
  // A sup-norm equilateral triangle of side 2 has radius exactly 1.
  r = chebyshev_radius(square, {Vec2(Rat(0), Rat(0)), Vec2(Rat(2), Rat(0)),
                                Vec2(Rat(2), Rat(2))});
  CHECK(r == Rat(1));
}

TEST_CASE("jung constant of the square is exactly 1") {
  JungResult res = jung_constant(square_norm(), 0.01);
  CHECK(res.enclosure.exact);
  CHECK(res.enclosure.lo == Rat(1));
  CHECK(res.enclosure.hi == Rat(1));
  Enclosure alpha = alpha_v(square_norm(), 0.01);
  CHECK(alpha.exact);
  CHECK(alpha.lo == Rat(1, 8));
}

TEST_CASE("jung constant of the hexagon is 4/3 (Bohnenblust attained)") {
  JungResult res = jung_constant(hexagon_norm(), 0.01);
  CHECK(res.enclosure.lo == Rat(4, 3));  // vertex-pair witness is exact
  CHECK(res.enclosure.hi == Rat(4, 3));  // clamp meets the witness
  Enclosure alpha = alpha_from_jung(res.enclosure, hexagon_norm().self_perimeter());
  CHECK(alpha.lo <= Rat(1, 8));
  CHECK(alpha.hi >= Rat(1, 8));
  CHECK(alpha.lo == Rat(1, 8));  // exact here since the enclosure collapsed
  // Independent brute-force grid oracle agrees.
  double oracle = jung_grid_oracle(hexagon_norm(), 3, 14);
  CHECK(std::fabs(oracle - 4.0 / 3.0) <= 0.05);
}

TEST_CASE("jung constant of a Euclidean polygon approaches 2/sqrt(3)") {
  PolygonalNorm ngon = euclidean_ngon(16);  // 32-gon: cheap and close
  JungResult res = jung_constant(ngon, 0.012);
  double mid = res.enclosure.mid();
  CHECK(std::fabs(mid - 2.0 / std::sqrt(3.0)) <= 0.015);
  CHECK(res.enclosure.hi <= Rat(4, 3));
  CHECK(res.enclosure.lo >= Rat(1));
  // Grid oracle stays below the certified upper bound and near the result.
  double oracle = jung_grid_oracle(ngon, 2, 12);
  CHECK(oracle <= rat_to_double(res.enclosure.hi) + 1e-9);
  CHECK(oracle >= rat_to_double(res.enclosure.lo) - 0.08);
}

TEST_CASE("sweep enclosures respect the clamps") {
  for (int s = 0; s < 10; ++s) {
    PolygonalNorm norm = random_symmetric_polygon(2 + s % 4, 31337 + s);
    Enclosure alpha = alpha_v(norm, 0);  // clamp-only
    CHECK(alpha.lo >= Rat(3, 32));
    CHECK(alpha.hi <= Rat(1, 6) + Rat(1, 100));  // 1/(1*6) when perimeter = 6
  }
}
