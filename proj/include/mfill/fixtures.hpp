#pragma once

#include "mfill/cayley.hpp"
#include "mfill/metric_space.hpp"
#include "mfill/polygon_norm.hpp"
#include "mfill/substrates.hpp"

namespace mfill {

/// Unit ball of the sup norm: the square (+-1, +-1).
PolygonalNorm square_norm();

/// Hexagonal norm with rational vertices (affine-regular hexagon); linearly
/// isometric to the regular hexagon norm, so self-perimeter 6, J = 4/3 and
/// alpha = 1/8 hold exactly.
PolygonalNorm hexagon_norm();

/// Rational approximation of the Euclidean disk: 2*half_count-gon with
/// vertices rounded to 9 decimal digits, exactly centrally symmetric.
PolygonalNorm euclidean_ngon(int half_count);

/// n points equally spaced on the unit circle with the chord metric,
/// rounded to rational entries (triangle inequality preserved).
FiniteMetricSpace circle_chord_metric(std::size_t n);

/// The loop 0 -> 1 -> ... -> n-1 -> 0.
Loop full_cycle_loop(std::size_t n);

/// n x n grid graph with unit edges, vertex (i,j) at index j*n+i.
Graph grid_graph(std::size_t n);

/// Boundary walk of the full (n-1)x(n-1) square in an n x n grid.
Loop grid_boundary_loop(std::size_t n);

/// Complete binary tree of the given depth, unit edges, heap indexing.
Graph binary_tree_graph(int depth);

/// Closed out-and-back walk from the root to the leftmost leaf of a
/// heap-indexed binary tree of the given depth.
Loop tree_out_and_back_loop(int depth);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Deterministic random metric: shortest paths of a random weighted
/// connected graph.
FiniteMetricSpace random_metric(std::size_t n, std::uint64_t seed);

/// Grid-aligned octagon loop on a union-jack patch: half-width `a` and
/// corner cut `k` in lattice units around lattice center (ci, cj). The
/// 45-degree runs follow existing diagonals, which requires
/// (2a - k) == (ci + cj) mod 2. This is the lattice's honest discrete
/// circle: every side digitizes with factor 1.
Loop octagon_loop(const PlanePatch& patch, long ci, long cj, long a, long k);

/// Corner cut giving the most circle-like octagon of half-width a with the
/// parity constraint above.
long octagon_regular_cut(long a, long parity);

}  // namespace mfill
