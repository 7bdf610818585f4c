#include <doctest.h>

#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/jung.hpp"
#include "mfill/polygon_norm.hpp"

using namespace mfill;

namespace {

PolygonalNorm diamond_norm() {
  return PolygonalNorm({Vec2(Rat(1), Rat(0)), Vec2(Rat(0), Rat(1)),
                        Vec2(Rat(-1), Rat(0)), Vec2(Rat(0), Rat(-1))});
}

}  // namespace

TEST_CASE("construction rejects degenerate balls") {
  // Odd count.
  CHECK_THROWS_AS(PolygonalNorm({Vec2(Rat(1), Rat(0)), Vec2(Rat(0), Rat(1)),
                                 Vec2(Rat(-1), Rat(-1))}),
                  ValidationError);
  // Not centrally symmetric.
  CHECK_THROWS_AS(PolygonalNorm({Vec2(Rat(2), Rat(0)), Vec2(Rat(0), Rat(1)),
                                 Vec2(Rat(-1), Rat(0)), Vec2(Rat(0), Rat(-1))}),
                  ValidationError);
  // Collinear triple (flat vertex on the square's edge).
  CHECK_THROWS_AS(PolygonalNorm({Vec2(Rat(1), Rat(-1)), Vec2(Rat(1), Rat(0)),
                                 Vec2(Rat(1), Rat(1)), Vec2(Rat(-1), Rat(1)),
                                 Vec2(Rat(-1), Rat(0)), Vec2(Rat(-1), Rat(-1))}),
                  ValidationError);
  // Repairing is not attempted: clockwise input is fine though (reoriented).
  CHECK_NOTHROW(PolygonalNorm({Vec2(Rat(1), Rat(-1)), Vec2(Rat(-1), Rat(-1)),
                               Vec2(Rat(-1), Rat(1)), Vec2(Rat(1), Rat(1))}));
}

TEST_CASE("gauge examples") {
  PolygonalNorm square = square_norm();
  CHECK(square.gauge(Vec2(Rat(3), Rat(4))) == Rat(4));
  CHECK(square.gauge(Vec2(Rat(0), Rat(0))) == Rat(0));
  CHECK(diamond_norm().gauge(Vec2(Rat(3), Rat(4))) == Rat(7));
  // Scale invariance: scaling the ball by t scales the gauge by 1/t.
  std::vector<Vec2> scaled;
  for (const Vec2& v : square.vertices()) scaled.push_back(v * Rat(3, 2));
  PolygonalNorm big(std::move(scaled));
  CHECK(big.gauge(Vec2(Rat(3), Rat(4))) == Rat(4) / Rat(3, 2));
}

TEST_CASE("self perimeter: square 8, hexagon 6, n-gons in Golab range") {
  CHECK(square_norm().self_perimeter() == Rat(8));
  CHECK(hexagon_norm().self_perimeter() == Rat(6));
  for (int m = 2; m <= 64; ++m) {
    Rat p = euclidean_ngon(m).self_perimeter();
    CHECK(p >= Rat(6));
    CHECK(p <= Rat(8));
  }
  // Euclidean limit approaches 2 pi from inside [6, 8].
  Rat p64 = euclidean_ngon(32).self_perimeter();
  CHECK(rat_to_double(p64) == doctest::Approx(2 * M_PI).epsilon(2e-3));
}

TEST_CASE("scale invariance of the norm invariants") {
  PolygonalNorm hex = hexagon_norm();
  std::vector<Vec2> scaled;
  for (const Vec2& v : hex.vertices()) scaled.push_back(v * Rat(7, 3));
  PolygonalNorm big(std::move(scaled));
  CHECK(big.self_perimeter() == hex.self_perimeter());
  for (AreaDefinition mu : {AreaDefinition::hausdorff, AreaDefinition::holmes_thompson,
                            AreaDefinition::mass_star})
    CHECK(pi_eq(big.isoperimetric_ratio(mu), hex.isoperimetric_ratio(mu)));
  JungResult a = jung_constant(hex, 0.01);
  JungResult b = jung_constant(big, 0.01);
  CHECK(a.enclosure.lo == b.enclosure.lo);  // both collapse to 4/3 exactly
  CHECK(a.enclosure.hi == b.enclosure.hi);
}

TEST_CASE("polar dual: square <-> diamond, involution") {
  PolygonalNorm square = square_norm();
  PolygonalNorm dual = square.polar_dual();
  CHECK(dual.vertices() == diamond_norm().vertices());
  CHECK(dual.polar_dual().vertices() == square.vertices());
}

TEST_CASE("polar dual satisfies the support characterization") {
  // Oracle: dual vertex i is tight exactly on ball edge (v_i, v_i+1) and
  // feasible against every other vertex.
  auto check_support = [](const PolygonalNorm& norm) {
    const auto& v = norm.vertices();
    const auto& u = norm.dual_vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(dot(u[i], v[i]) == Rat(1));
      CHECK(dot(u[i], v[(i + 1) % n]) == Rat(1));
      for (std::size_t j = 0; j < n; ++j) CHECK(dot(u[i], v[j]) <= Rat(1));
    }
  };
  check_support(hexagon_norm());
  check_support(euclidean_ngon(8));
  for (int s = 0; s < 5; ++s) check_support(random_symmetric_polygon(3 + s, 11 + s));
}

TEST_CASE("jacobian of a seminorm") {
  CHECK(pi_eq(jacobian2(Rat(4)), PiScalar(Rat(1, 4), 1)));  // square ball: pi/4
  CHECK(jacobian2(Rat(1), true).coeff == Rat(0));           // unbounded unit set
  CHECK_THROWS_AS(jacobian2(Rat(-1)), ValidationError);
}

TEST_CASE("area densities for the square") {
  PolygonalNorm square = square_norm();
  CHECK(pi_eq(square.area_density(AreaDefinition::hausdorff), PiScalar(Rat(1, 4), 1)));
  CHECK(pi_eq(square.area_density(AreaDefinition::holmes_thompson), PiScalar(Rat(2), -1)));
  CHECK(pi_eq(square.area_density(AreaDefinition::mass_star), PiScalar(Rat(1))));
  // Hausdorff normalization: density x |B| = pi exactly.
  PiScalar prod = square.area_density(AreaDefinition::hausdorff) *
                  PiScalar(square.ball_area());
  CHECK(pi_eq(prod, PiScalar(Rat(1), 1)));
}

TEST_CASE("density inequalities are certified on random norms") {
  for (int s = 0; s < 20; ++s) {
    PolygonalNorm norm = random_symmetric_polygon(2 + s % 5, 101 + s);
    PiScalar ht = norm.area_density(AreaDefinition::holmes_thompson);
    CHECK(pi_cmp(ht, norm.area_density(AreaDefinition::hausdorff)) <= 0);
    CHECK(pi_cmp(ht, norm.area_density(AreaDefinition::mass_star)) <= 0);
  }
}

TEST_CASE("isoperimetrix of the square is the diamond, ratios pinned") {
  PolygonalNorm square = square_norm();
  CHECK(square.isoperimetrix() == diamond_norm().vertices());
  CHECK(pi_eq(square.isoperimetric_ratio(AreaDefinition::holmes_thompson),
              PiScalar(Rat(1, 4), -1)));
  PiScalar ms = square.isoperimetric_ratio(AreaDefinition::mass_star);
  CHECK(ms.is_rational());
  CHECK(ms.coeff == Rat(1, 8));
}

TEST_CASE("isoperimetrix properties on random norms") {
  for (int s = 0; s < 12; ++s) {
    PolygonalNorm norm = random_symmetric_polygon(2 + s % 4, 577 + s);
    // Norm perimeter of the isoperimetrix = 2 |B_dual| exactly.
    std::vector<Vec2> iso = norm.isoperimetrix();
    Rat dual_area = polygon_area(norm.dual_vertices());
    CHECK(norm.perimeter_of(iso) == dual_area * 2);
    // Holmes-Thompson ratio is identically 1/(4 pi).
    CHECK(pi_eq(norm.isoperimetric_ratio(AreaDefinition::holmes_thompson),
                PiScalar(Rat(1, 4), -1)));
    // All ratios >= 1/(4 pi).
    for (AreaDefinition mu : {AreaDefinition::hausdorff, AreaDefinition::mass_star})
      CHECK(pi_cmp(norm.isoperimetric_ratio(mu), PiScalar(Rat(1, 4), -1)) >= 0);
  }
  // Euclidean approximation: isoperimetrix ratio near equality for mass*.
  PiScalar r = euclidean_ngon(32).isoperimetric_ratio(AreaDefinition::mass_star);
  CHECK(r.to_double() == doctest::Approx(1.0 / (4 * M_PI)).epsilon(2e-3));
}

TEST_CASE("random symmetric polygons: determinism and validity") {
  PolygonalNorm a = random_symmetric_polygon(3, 1);
  PolygonalNorm b = random_symmetric_polygon(3, 1);
  CHECK(a.vertices() == b.vertices());
  CHECK(a.vertices().size() == 6);
  CHECK(random_symmetric_polygon(2, 9).vertices().size() == 4);  // parallelogram
  PolygonalNorm c = random_symmetric_polygon(3, 2);
  CHECK(a.vertices() != c.vertices());
}
