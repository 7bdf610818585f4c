#include "mfill/profile.hpp"

#include <algorithm>
#include <cmath>

#include "mfill/errors.hpp"

namespace mfill {

ProfileResult isoperimetric_profile(const SimplicialComplex2& k,
                                    const std::vector<Loop>& loops) {
  ProfileResult res;
  double num = 0, den = 0;
  for (const Loop& loop : loops) {
    ProfileEntry entry;
    entry.length = k.loop_length_double(loop);
    try {
      Chain z = k.loop_chain(loop);
      FillResult fill = min_filling_area(k, z, FillMode::relaxed);
      entry.fill_area = rat_to_double(fill.area);
      entry.ratio = entry.fill_area / (entry.length * entry.length);
      num += entry.fill_area * entry.length * entry.length;
      den += std::pow(entry.length, 4.0);
    } catch (const InfeasibleError& err) {
      entry.skipped = true;
      entry.note = err.what();
    }
    res.entries.push_back(std::move(entry));
  }
  res.fitted_coefficient = den > 0 ? num / den : 0;

  std::vector<double> ratios;
  for (const auto& e : res.entries)
    if (!e.skipped) ratios.push_back(e.ratio);
  if (ratios.size() < 2) {
    res.verdict = "irregular";
    return res;
  }
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i)
    if (ratios[i + 1] > ratios[i] * 1.02) decreasing = false;
  if (decreasing && ratios.back() < 0.5 * ratios.front())
    res.verdict = "subquadratic";
  else if (lo > 0 && hi / lo <= 1.5)
    res.verdict = "quadratic-with-constant";
  else
    res.verdict = "irregular";
  return res;
}

namespace {

long lround_rat(double x) { return static_cast<long>(std::llround(x)); }

// Walks the 1-skeleton of a union-jack patch from one lattice point to
// another, following the segment. Axis and (available) diagonal moves are
// exact; other slopes take the closest-to-segment monotone step.
void walk_segment(const PlanePatch& patch, long i0, long j0, long i1, long j1,
                  std::vector<std::size_t>& out) {
  const long m = patch.cells_per_side;
  auto has_ne_diag = [&](long ci, long cj) {  // cell (ci,cj) carries NE diagonal
    return ci >= 0 && cj >= 0 && ci < m && cj < m && (ci + cj) % 2 == 0;
  };
  auto has_nw_diag = [&](long ci, long cj) { return ci >= 0 && cj >= 0 && ci < m && cj < m && (ci + cj) % 2 == 1; };

  long i = i0, j = j0;
  const double px = static_cast<double>(i0), py = static_cast<double>(j0);
  const double qx = static_cast<double>(i1), qy = static_cast<double>(j1);
  auto dist_to_line = [&](long a, long b) {
    double vx = qx - px, vy = qy - py;
    double len = std::hypot(vx, vy);
    if (len == 0) return std::hypot(a - px, b - py);
    return std::fabs(vx * (b - py) - vy * (a - px)) / len;
  };

  int guard = 0;
  while (i != i1 || j != j1) {
    if (++guard > 8 * (m + 1) * 4) throw Error("segment walk diverged (internal)");
    long di = i1 - i, dj = j1 - j;
    long si = di > 0 ? 1 : (di < 0 ? -1 : 0);
    long sj = dj > 0 ? 1 : (dj < 0 ? -1 : 0);

    bool moved = false;
    if (si != 0 && sj != 0) {
      // Try the diagonal step if that edge exists.
      bool ok = false;
      if (si == sj)
        ok = has_ne_diag(std::min(i, i + si), std::min(j, j + sj));
      else
        ok = has_nw_diag(std::min(i, i + si), std::min(j, j + sj));
      if (ok) {
        double d_diag = dist_to_line(i + si, j + sj);
        double d_h = dist_to_line(i + si, j);
        double d_v = dist_to_line(i, j + sj);
        if (d_diag <= d_h && d_diag <= d_v) {
          i += si;
          j += sj;
          moved = true;
        }
      }
      if (!moved) {
        if (dist_to_line(i + si, j) <= dist_to_line(i, j + sj))
          i += si;
        else
          j += sj;
        moved = true;
      }
    } else if (si != 0) {
      i += si;
      moved = true;
    } else {
      j += sj;
      moved = true;
    }
    if (moved) out.push_back(patch.vertex_at(i, j));
  }
}

}  // namespace

SemiEllipticityResult semi_ellipticity_check(const PolygonalNorm& norm,
                                             const std::vector<Vec2>& region,
                                             const Rat& mesh, AreaDefinition mu,
                                             double tolerance) {
  if (region.size() < 2) throw ValidationError("region needs at least 2 vertices");
  if (mesh <= 0) throw ValidationError("mesh must be positive");
  // Convexity (non-strict) when the region is a genuine polygon.
  if (region.size() >= 3) {
    Rat orient = twice_signed_area(region);
    const std::size_t n = region.size();
    for (std::size_t a = 0; a < n; ++a) {
      Rat c = cross(region[(a + 1) % n] - region[a], region[(a + 2) % n] - region[(a + 1) % n]);
      if (orient >= 0 ? c < 0 : c > 0)
        throw ValidationError("region polygon is not convex");
    }
  }

  Rat max_coord = 0;
  for (const Vec2& p : region) {
    if (p.x < 0 || p.y < 0)
      throw ValidationError("region must lie in the positive quadrant");
    max_coord = std::max(max_coord, std::max(p.x, p.y));
  }
  long cells = lround_rat(std::ceil(rat_to_double(max_coord / mesh))) + 1;
  PiScalar density = norm.area_density(mu);
  PlanePatch patch = plane_patch(mesh * cells, mesh, density.coeff);

  // Snap region vertices to lattice points.
  std::vector<std::pair<long, long>> lattice;
  for (const Vec2& p : region) {
    double xi = rat_to_double(p.x / mesh);
    double yj = rat_to_double(p.y / mesh);
    long i = lround_rat(xi), j = lround_rat(yj);
    double err = std::max(std::fabs(xi - i), std::fabs(yj - j)) * rat_to_double(mesh);
    if (err > rat_to_double(mesh) / 2 + 1e-12)
      throw ValidationError("mesh too coarse to represent the region boundary");
    lattice.push_back({i, j});
  }

  Loop loop;
  loop.vertices.push_back(patch.vertex_at(lattice[0].first, lattice[0].second));
  for (std::size_t s = 0; s < lattice.size(); ++s) {
    auto [i1, j1] = lattice[(s + 1) % lattice.size()];
    auto [i0, j0] = lattice[s];
    walk_segment(patch, i0, j0, i1, j1, loop.vertices);
  }
  if (loop.vertices.front() == loop.vertices.back()) loop.vertices.pop_back();
  // Drop consecutive duplicates from degenerate snaps.
  std::vector<std::size_t> cleaned;
  for (std::size_t v : loop.vertices)
    if (cleaned.empty() || cleaned.back() != v) cleaned.push_back(v);
  while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
  loop.vertices = std::move(cleaned);

  SemiEllipticityResult res;
  res.pi_exponent = density.pi_exp;
  res.target = density.coeff * polygon_area(region);

  if (loop.vertices.size() < 2) {
    res.fill = 0;
  } else {
    Chain z = patch.complex.loop_chain(loop);
    if (z.coeffs.empty()) {
      res.fill = 0;
    } else {
      FillResult fill = min_filling_area(patch.complex, z, FillMode::relaxed);
      res.fill = fill.area;
    }
  }
  if (res.target == 0) {
    res.pass = true;
    res.ratio = 1.0;
  } else {
    Rat threshold = res.target * (1 - rat_from_double(tolerance));
    res.pass = res.fill >= threshold;
    res.ratio = rat_to_double(res.fill / res.target);
  }
  return res;
}

}  // namespace mfill
