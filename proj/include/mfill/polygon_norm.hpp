#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfill/geometry.hpp"
#include "mfill/pi_scalar.hpp"

namespace mfill {

enum class AreaDefinition { hausdorff, holmes_thompson, mass_star };

const char* area_definition_name(AreaDefinition mu);
AreaDefinition area_definition_from_string(const std::string& tag);

/// A 2-dimensional normed space given by its polygonal unit ball.
///
/// The ball is a centrally symmetric, strictly convex polygon with rational
/// vertices, stored counterclockwise starting from the lexicographically
/// smallest vertex. Degenerate input (odd count, collinear triples, origin
/// not strictly interior, asymmetry) is rejected at construction.
class PolygonalNorm {
 public:
  explicit PolygonalNorm(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }

  /// Support functionals of the ball edges = vertices of the polar dual,
  /// listed so that dual_vertices()[i] is tight on edge (v_i, v_{i+1}).
  const std::vector<Vec2>& dual_vertices() const;

  /// Minkowski functional of the ball: min{t >= 0 : v in t*B}. Exact.
  Rat gauge(const Vec2& v) const;

  /// Lebesgue area of the unit ball. Exact.
  Rat ball_area() const;

  /// Norm length of the ball boundary (sum of edge gauges). Exact.
  Rat self_perimeter() const;

  /// Norm length of an arbitrary polygon boundary measured in this norm.
  Rat perimeter_of(const std::vector<Vec2>& ring) const;

  /// Polar dual {y : <x,y> <= 1 for all x in B}, again a valid norm ball.
  PolygonalNorm polar_dual() const;

  /// The isoperimetrix: polar dual rotated by +90 degrees, at unit scale.
  /// Its norm perimeter equals exactly twice the dual ball area.
  std::vector<Vec2> isoperimetrix() const;

  /// Lebesgue area of the minimum-area enclosing parallelogram of the ball.
  Rat min_enclosing_parallelogram_area() const;

  /// Density c with mu_V = c * Lebesgue for the chosen area definition.
  PiScalar area_density(AreaDefinition mu) const;

  /// mu(I_V) / length(boundary I_V)^2 for the isoperimetrix I_V.
  PiScalar isoperimetric_ratio(AreaDefinition mu) const;

  /// Ball is a parallelogram (4 vertices), i.e. the norm is linearly sup.
  bool is_parallelogram() const { return verts_.size() == 4; }

 private:
  std::vector<Vec2> verts_;
  mutable std::vector<Vec2> dual_;  // cached support functionals
};

/// Jacobian of a seminorm from the Lebesgue area of its unit set:
/// pi / area, or 0 for an unbounded unit set (degenerate seminorm).
PiScalar jacobian2(const Rat& unit_set_area, bool unbounded = false);

/// Deterministic random centrally symmetric strictly convex polygon with
/// 2*half_vertex_count vertices. Same (count, seed) gives the same polygon.
PolygonalNorm random_symmetric_polygon(int half_vertex_count, std::uint64_t seed);

/// Certified enclosure of a scalar quantity; `exact` is set when lo == hi
/// holds as an exact rational statement.
struct Enclosure {
  Rat lo{0}, hi{0};
  bool exact = false;

  double mid() const { return (rat_to_double(lo) + rat_to_double(hi)) / 2; }
  double width() const { return rat_to_double(hi - lo); }
};

/// Bundle of every norm invariant the toolkit computes for one ball.
struct NormInvariantReport {
  Rat self_perimeter;
  Enclosure jung;
  Enclosure alpha_v;
  std::map<AreaDefinition, PiScalar> densities;
  std::vector<Vec2> isoperimetrix_vertices;
  std::map<AreaDefinition, PiScalar> isoperimetric_ratio;
};

}  // namespace mfill
