#pragma once

#include "mfill/complex2.hpp"
#include "mfill/metric_space.hpp"

namespace mfill {

/// Filling-radius estimate via Vietoris-Rips death: half the smallest scale
/// t (among the pairwise distances) at which the loop's class dies in H1
/// over the rationals. Monotone feasibility is exploited by binary search.
Rat rips_filling_radius(const FiniteMetricSpace& m, const Loop& loop);

/// Direct route: Kuratowski-embed the space into sup-norm coordinates and
/// scan neighborhood complexes whose cells enter at their sup-norm
/// circumradius (half diameter). Cross-validates rips_filling_radius.
Rat kuratowski_filling_radius(const FiniteMetricSpace& m, const Loop& loop);

}  // namespace mfill
