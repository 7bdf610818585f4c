#pragma once

#include "mfill/metric_space.hpp"

namespace mfill {

/// Discretized injective envelope (tight span).
///
/// Samples the set E(m) of extremal functions f (f(x)+f(y) >= d(x,y),
/// pointwise minimal) under the sup metric. Every emitted function
/// satisfies the extremality identity f(x) = max_y (d(x,y) - f(y))
/// exactly; the anchors h_x = d(x,.) form an isometric copy of m.
struct TightSpanResult {
  FiniteMetricSpace space;
  std::vector<std::vector<Rat>> functions;   // rows: sampled extremal functions
  std::vector<std::size_t> anchor_indices;   // anchor_indices[i] = row of h_{x_i}
};

TightSpanResult tight_span(const FiniteMetricSpace& m, const Rat& resolution,
                           std::size_t point_cap = 12);

/// True iff f satisfies the extremality identity for m, exactly.
bool is_extremal_function(const FiniteMetricSpace& m, const std::vector<Rat>& f);

/// Lower any feasible function (f(x)+f(y) >= d(x,y)) to an extremal one by
/// exact coordinate descent in the given sweep order.
std::vector<Rat> descend_to_extremal(const FiniteMetricSpace& m, std::vector<Rat> f,
                                     const std::vector<std::size_t>& order);

/// Thickening X_delta: injective envelopes of the 8*delta balls around a
/// maximal delta-separated net, glued along the original space. Original
/// vertices embed isometrically; every added point stays within 64*delta
/// of them.
struct ThickeningResult {
  FiniteMetricSpace space;
  std::vector<std::size_t> original_indices;  // row of each original vertex
  std::vector<std::size_t> net;               // net members (original indexing)
  Rat max_envelope_diameter;                   // observed, for reports
};

ThickeningResult delta_thickening(const Graph& g, const Rat& delta,
                                  std::size_t ball_cap = 12);

}  // namespace mfill
