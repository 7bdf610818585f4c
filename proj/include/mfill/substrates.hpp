#pragma once

#include "mfill/complex2.hpp"
#include "mfill/polygon_norm.hpp"

namespace mfill {

/// Triangulated square patch [0, extent]^2 with union-jack (alternating)
/// diagonals: cells with even i+j carry the NE diagonal, odd cells the NW
/// one. Triangle weights are exact Euclidean areas (mesh^2 / 2), optionally
/// scaled by a rational density factor.
struct PlanePatch {
  SimplicialComplex2 complex;
  Rat mesh;
  long cells_per_side;

  std::size_t vertex_at(long i, long j) const {
    return static_cast<std::size_t>(j * (cells_per_side + 1) + i);
  }
};

PlanePatch plane_patch(const Rat& extent, const Rat& mesh,
                       const Rat& weight_density = Rat(1),
                       std::size_t triangle_cap = 100000);

/// Patch with weights = Euclidean area x (rational part of the norm's area
/// density); the pi exponent of the density is returned so callers can keep
/// comparisons exact.
PlanePatch plane_patch_normed(const PolygonalNorm& norm, AreaDefinition mu,
                              const Rat& extent, const Rat& mesh, int& pi_exp_out,
                              std::size_t triangle_cap = 100000);

/// Ball of the order-7 triangle tiling ({3,7}: seven triangles around every
/// interior vertex), built layer by layer. rings[k] is the boundary cycle
/// after k+1 layers; weights are 1 (combinatorial metric).
struct HyperbolicBall {
  SimplicialComplex2 complex;
  std::vector<std::vector<std::size_t>> rings;
};

HyperbolicBall hyperbolic_ball(int layers, std::size_t triangle_cap = 100000);

/// Octahedron surface (8 unit-weight triangles, vertex metric = unit edge
/// graph metric). The equator is 0-1-2-3.
SimplicialComplex2 octahedron();

/// Triangulated cylinder: n-gon rims at heights 0 and h, unit rim edges,
/// vertical edges of length h; optionally capped with a fan on the top rim.
/// Vertex metric = graph metric of the 1-skeleton.
SimplicialComplex2 cylinder_complex(std::size_t n, const Rat& height, bool capped);

/// Triangles of a patch whose centroid lies inside the given disk.
std::vector<std::size_t> disk_region(const PlanePatch& patch, double cx, double cy,
                                     double radius);

/// Oriented boundary cycles of a set of triangles (coefficients +-1).
std::vector<Loop> region_boundary_loops(const SimplicialComplex2& k,
                                        const std::vector<std::size_t>& region);

/// Boundary loop of the disk of the given radius, centered in the patch;
/// throws if the digitized boundary is not a single cycle.
Loop circle_loop(const PlanePatch& patch, double cx, double cy, double radius);

}  // namespace mfill
