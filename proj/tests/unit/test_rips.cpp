#include <doctest.h>

#include <cmath>

#include "mfill/fixtures.hpp"
#include "mfill/rips.hpp"

using namespace mfill;

TEST_CASE("equilateral triangle dies at its side length") {
  Rat s(7, 4);
  FiniteMetricSpace m({"a", "b", "c"},
                      {{Rat(0), s, s}, {s, Rat(0), s}, {s, s, Rat(0)}});
  Loop tri = full_cycle_loop(3);
  CHECK(rips_filling_radius(m, tri) == s / 2);
  CHECK(kuratowski_filling_radius(m, tri) == s / 2);
}

TEST_CASE("square with diagonals dies when the diagonal 2-cells appear") {
  // 4 points of a unit square with Euclidean-like rational distances.
  Rat one(1), diag(141421356, 100000000);
  FiniteMetricSpace m({"a", "b", "c", "d"},
                      {{Rat(0), one, diag, one},
                       {one, Rat(0), one, diag},
                       {diag, one, Rat(0), one},
                       {one, diag, one, Rat(0)}});
  Loop sq = full_cycle_loop(4);
  // The 4-cycle bounds once triangles with a diagonal enter, at t = diag.
  CHECK(rips_filling_radius(m, sq) == diag / 2);
}

TEST_CASE("Katz: 60-gon chord circle dies at sqrt(3), small version") {
  // 24 points keep the unit test quick; the acceptance suite runs 60.
  FiniteMetricSpace circle = circle_chord_metric(24);
  Loop loop = full_cycle_loop(24);
  Rat r = rips_filling_radius(circle, loop);
  CHECK(rat_to_double(r) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(0.03));
  Rat direct = kuratowski_filling_radius(circle, loop);
  CHECK(rat_to_double(direct - r) == doctest::Approx(0.0).epsilon(1e-12));
}
