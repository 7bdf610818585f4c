#pragma once

#include <array>

#include "mfill/polygon_norm.hpp"

namespace mfill {

struct JungResult {
  Enclosure enclosure;
  /// Best witness triangle found, first point pinned at the origin.
  std::array<Vec2, 3> witness;
  long evaluations = 0;
  long promotions = 0;
};

/// Chebyshev radius of up to three points under the polygonal norm,
/// solved exactly (rational LP).
Rat chebyshev_radius(const PolygonalNorm& norm, const std::array<Vec2, 3>& pts);

/// Jung constant J(V): the smallest r >= 1 such that every subset of
/// diameter <= 2 fits in a ball of radius r. By Helly it suffices to
/// maximize the Chebyshev radius over 3-point sets of diameter <= 2;
/// a branch-and-bound over normalized triangles returns a certified
/// enclosure of width <= resolution, clamped into [1, 4/3].
///
/// Parallelogram balls short-circuit to the exact value 1.
/// Throws EnclosureError when the budget runs out before the target width.
JungResult jung_constant(const PolygonalNorm& norm, double resolution,
                         long max_evaluations = 4000000);

/// alpha_V = 1 / (J(V) * self_perimeter), with the Jung enclosure propagated.
Enclosure alpha_v(const PolygonalNorm& norm, double jung_resolution);
Enclosure alpha_from_jung(const Enclosure& jung, const Rat& self_perimeter);

/// Full invariant bundle; jung_resolution <= 0 requests the cheap clamp-only
/// enclosure [1, 4/3] (used in sweeps, where the clamp is all that's needed).
NormInvariantReport compute_norm_invariants(const PolygonalNorm& norm,
                                            double jung_resolution);

}  // namespace mfill
