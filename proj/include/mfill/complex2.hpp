#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mfill/rational.hpp"

namespace mfill {

/// Sparse chain: nonzero rational coefficients on cells of one dimension.
struct Chain {
  int dim = 1;  // 1 = edges, 2 = triangles
  std::map<std::size_t, Rat> coeffs;

  void add(std::size_t cell, const Rat& c) {
    if (c == 0) return;
    auto it = coeffs.find(cell);
    if (it == coeffs.end()) {
      coeffs.emplace(cell, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  bool is_integral() const {
    for (const auto& [cell, c] : coeffs)
      if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }
  Chain scaled(const Rat& t) const {
    Chain out;
    out.dim = dim;
    if (t != 0)
      for (const auto& [cell, c] : coeffs) out.coeffs.emplace(cell, c * t);
    return out;
  }
};

/// Closed vertex walk in the 1-skeleton; induces a 1-chain.
struct Loop {
  std::vector<std::size_t> vertices;  // cyclic; edge i: vertices[i] -> vertices[i+1]
};

/// Oriented simplicial 2-complex: vertices (optional coordinates, optional
/// vertex metric), canonical edges (u < v, oriented u -> v) and oriented
/// triangles with positive weights. Every 2-cell is a 3-gon by construction
/// and d1 . d2 = 0 holds exactly.
class SimplicialComplex2 {
 public:
  SimplicialComplex2(std::size_t vertex_count,
                     std::vector<std::array<std::size_t, 3>> triangles,
                     std::vector<Rat> weights = {},
                     std::vector<std::pair<std::size_t, std::size_t>> extra_edges = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::array<std::size_t, 3>>& triangles() const { return tris_; }
  const std::vector<Rat>& weights() const { return weights_; }

  /// Vertex coordinates (2d or 3d), optional; used for lengths and plots.
  void set_coords(std::vector<std::vector<Rat>> coords);
  const std::vector<std::vector<Rat>>& coords() const { return coords_; }
  bool has_coords() const { return !coords_.empty(); }

  void set_vertex_metric(std::vector<std::vector<Rat>> metric);
  bool has_vertex_metric() const { return !vertex_metric_.empty(); }
  const std::vector<std::vector<Rat>>& vertex_metric() const { return vertex_metric_; }

  std::size_t edge_index(std::size_t u, std::size_t v) const;  // throws if absent
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  /// Edges of a triangle with signs relative to canonical edge orientation.
  std::array<std::pair<std::size_t, int>, 3> triangle_edges(std::size_t t) const;

  /// Triangles incident to each edge.
  const std::vector<std::vector<std::size_t>>& edge_stars() const { return edge_star_; }

  /// Every edge lies in at most two triangles.
  bool is_surface_like() const;

  /// Euclidean edge length from coordinates (1 when absent).
  double edge_length_double(std::size_t e) const;

  Chain loop_chain(const Loop& loop) const;
  double loop_length_double(const Loop& loop) const;

  /// Boundary of a chain (dim 2 -> 1 or dim 1 -> 0 as vertex coefficients).
  Chain boundary(const Chain& c) const;
  bool is_cycle(const Chain& z) const;

  /// Dense integer boundary matrices (d1: vertices x edges, d2: edges x triangles).
  std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
  boundary_matrices() const;

 private:
  std::size_t vertex_count_;
  std::vector<std::array<std::size_t, 3>> tris_;
  std::vector<Rat> weights_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
  std::vector<std::vector<std::size_t>> edge_star_;
  std::vector<std::vector<Rat>> coords_;
  std::vector<std::vector<Rat>> vertex_metric_;
};

enum class FillMode { relaxed, integral };

struct FillResult {
  Rat area;                // optimal weighted area (exact)
  Chain filling;           // dim-2 certificate, feasibility re-verified
  std::vector<Rat> dual;   // edge potentials: |d2^T y| <= w and y.z = area
};

/// Minimal weighted filling: minimize sum w_t |c_t| over d2 c = z.
///
/// Surface-like complexes are solved exactly at any size by dual-graph
/// propagation plus per-component weighted medians; other complexes go
/// through an exact rational simplex capped at `simplex_cap` triangles
/// (override with MFILL_CAP). Throws InfeasibleError when z is not a
/// boundary; integral mode requires an integral z.
FillResult min_filling_area(const SimplicialComplex2& k, const Chain& z, FillMode mode,
                            std::size_t simplex_cap = 400);

/// The dense-simplex route, always. Slower than the surface path but valid
/// on any complex; kept public as an independent cross-check.
FillResult min_filling_area_dense(const SimplicialComplex2& k, const Chain& z,
                                  FillMode mode, std::size_t simplex_cap = 400);

/// Smallest r such that z bounds within the subcomplex spanned by vertices
/// at metric distance <= r from the support of z. Requires a vertex metric.
Rat filling_radius(const SimplicialComplex2& k, const Chain& z);

/// Exact feasibility test: is z a boundary using only `allowed` triangles?
bool chain_is_boundary(const SimplicialComplex2& k, const Chain& z,
                       const std::vector<std::size_t>& allowed_triangles);

/// Rank of d2 over the rationals.
std::size_t boundary2_rank(const SimplicialComplex2& k);

}  // namespace mfill
