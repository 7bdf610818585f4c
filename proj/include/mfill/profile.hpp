#pragma once

#include <string>

#include "mfill/complex2.hpp"
#include "mfill/polygon_norm.hpp"
#include "mfill/substrates.hpp"

namespace mfill {

struct ProfileEntry {
  double length = 0;
  double fill_area = 0;
  double ratio = 0;  // fill_area / length^2
  bool skipped = false;
  std::string note;
};

struct ProfileResult {
  std::vector<ProfileEntry> entries;
  double fitted_coefficient = 0;  // least squares of area against length^2
  std::string verdict;            // "quadratic-with-constant" | "subquadratic" | "irregular"
};

/// Fill-area/length^2 profile over a family of loops (relaxed fillings,
/// geometric weights). Unfillable loops are skipped with a notice.
ProfileResult isoperimetric_profile(const SimplicialComplex2& k,
                                    const std::vector<Loop>& loops);

struct SemiEllipticityResult {
  bool pass = false;
  Rat fill;          // minimal filling area of the digitized boundary
  Rat target;        // mu(C): density coefficient x Lebesgue area of C
  int pi_exponent;   // common pi power of both sides
  double ratio = 0;  // fill / target
};

/// Semi-ellipticity probe: digitize the convex region's boundary onto a
/// normed patch and compare the minimal filling area against mu(C).
/// PASS iff fill >= target * (1 - tolerance). The polygon must have its
/// vertices on patch lattice points (within snapping tolerance).
SemiEllipticityResult semi_ellipticity_check(const PolygonalNorm& norm,
                                             const std::vector<Vec2>& region,
                                             const Rat& mesh, AreaDefinition mu,
                                             double tolerance = 0.05);

}  // namespace mfill
