#pragma once

#include <vector>

#include "mfill/rational.hpp"

namespace mfill {

/// Point / vector of the rational plane.
struct Vec2 {
  Rat x{0}, y{0};

  Vec2() = default;
  Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(const Rat& t) const { return {x * t, y * t}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Counterclockwise 90 degree rotation.
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

/// Lexicographic order (x, then y); used for canonical vertex rotation.
inline bool lex_less(const Vec2& a, const Vec2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Signed area times two (shoelace); positive for counterclockwise rings.
Rat twice_signed_area(const std::vector<Vec2>& ring);

/// Exact polygon area (positive, expects a simple ring).
inline Rat polygon_area(const std::vector<Vec2>& ring) {
  Rat t = twice_signed_area(ring);
  return rat_abs(t) / 2;
}

}  // namespace mfill
