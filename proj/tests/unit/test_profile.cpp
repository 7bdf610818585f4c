#include <doctest.h>

#include <cmath>

#include "mfill/fixtures.hpp"
#include "mfill/profile.hpp"

using namespace mfill;

TEST_CASE("flat profile on octagon circles (small version)") {
  PlanePatch patch = plane_patch(Rat(14), Rat(1, 2));
  long c = 14;
  std::vector<Loop> loops;
  for (long r = 3; r <= 6; ++r) {
    long a = 2 * r;
    loops.push_back(octagon_loop(patch, c, c, a, octagon_regular_cut(a, 0)));
  }
  ProfileResult prof = isoperimetric_profile(patch.complex, loops);
  double target = 1.0 / (4 * M_PI);
  CHECK(std::fabs(prof.fitted_coefficient - target) <= 0.15 * target);
  CHECK(prof.verdict == "quadratic-with-constant");
}

TEST_CASE("profile homogeneity: twice-traversed loops") {
  PlanePatch patch = plane_patch(Rat(8), Rat(1, 2));
  Loop once = octagon_loop(patch, 8, 8, 6, octagon_regular_cut(6, 0));
  Loop twice;
  twice.vertices = once.vertices;
  twice.vertices.insert(twice.vertices.end(), once.vertices.begin(),
                        once.vertices.end());
  Chain z1 = patch.complex.loop_chain(once);
  Chain z2 = patch.complex.loop_chain(twice);
  Rat f1 = min_filling_area(patch.complex, z1, FillMode::relaxed).area;
  Rat f2 = min_filling_area(patch.complex, z2, FillMode::relaxed).area;
  CHECK(f2 == f1 * 2);
  // Ratio of the doubled loop is exactly half the single ratio... the
  // doubled loop has twice the length and twice the area.
  double len1 = patch.complex.loop_length_double(once);
  double len2 = patch.complex.loop_length_double(twice);
  CHECK(len2 == doctest::Approx(2 * len1));
  double r1 = rat_to_double(f1) / (len1 * len1);
  double r2 = rat_to_double(f2) / (len2 * len2);
  CHECK(r2 == doctest::Approx(r1 / 2).epsilon(1e-9));
}

TEST_CASE("hyperbolic profile decays") {
  HyperbolicBall ball = hyperbolic_ball(4);
  std::vector<Loop> rings;
  for (const auto& ring : ball.rings) {
    Loop loop;
    loop.vertices = ring;
    rings.push_back(loop);
  }
  ProfileResult prof = isoperimetric_profile(ball.complex, rings);
  CHECK(prof.verdict == "subquadratic");
  for (std::size_t i = 0; i + 1 < prof.entries.size(); ++i)
    CHECK(prof.entries[i + 1].ratio < prof.entries[i].ratio);
}

TEST_CASE("unfillable loops are skipped with a notice") {
  SimplicialComplex2 open_cyl = cylinder_complex(6, Rat(2), false);
  Loop rim;
  for (std::size_t i = 0; i < 6; ++i) rim.vertices.push_back(i);
  ProfileResult prof = isoperimetric_profile(open_cyl, {rim});
  REQUIRE(prof.entries.size() == 1);
  CHECK(prof.entries[0].skipped);
  CHECK(!prof.entries[0].note.empty());
}

TEST_CASE("semi-ellipticity: Euclidean square region") {
  PolygonalNorm euclid = euclidean_ngon(16);
  std::vector<Vec2> square = {Vec2(Rat(1), Rat(1)), Vec2(Rat(2), Rat(1)),
                              Vec2(Rat(2), Rat(2)), Vec2(Rat(1), Rat(2))};
  SemiEllipticityResult res =
      semi_ellipticity_check(euclid, square, Rat(1, 8), AreaDefinition::mass_star);
  CHECK(res.pass);
  CHECK(res.ratio >= 0.95);
}

TEST_CASE("semi-ellipticity: diamond under the sup norm") {
  // Diamond centered at (11,11)/8 with radius 1: lattice-even diagonals.
  std::vector<Vec2> diamond = {Vec2(Rat(19, 8), Rat(11, 8)), Vec2(Rat(11, 8), Rat(19, 8)),
                               Vec2(Rat(3, 8), Rat(11, 8)), Vec2(Rat(11, 8), Rat(3, 8))};
  SemiEllipticityResult res = semi_ellipticity_check(square_norm(), diamond, Rat(1, 8),
                                                     AreaDefinition::mass_star);
  CHECK(res.pass);
  CHECK(res.target == Rat(2));  // mass* density 1, Lebesgue area 2
  CHECK(res.fill == Rat(2));    // exact: the diagonals digitize exactly
}

TEST_CASE("semi-ellipticity: degenerate segment region passes trivially") {
  std::vector<Vec2> segment = {Vec2(Rat(1), Rat(1)), Vec2(Rat(2), Rat(1))};
  SemiEllipticityResult res = semi_ellipticity_check(square_norm(), segment, Rat(1, 4),
                                                     AreaDefinition::mass_star);
  CHECK(res.pass);
  CHECK(res.target == Rat(0));
}
