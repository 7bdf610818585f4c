#include "mfill/jung.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mfill/errors.hpp"
#include "mfill/lp_small.hpp"

namespace mfill {

namespace {

struct DoubleNorm {
  std::vector<double> dux, duy;  // dual vertices (support functionals)
  std::vector<double> vx, vy;    // ball vertices
  double max_coord = 0;

  explicit DoubleNorm(const PolygonalNorm& norm) {
    for (const Vec2& u : norm.dual_vertices()) {
      dux.push_back(rat_to_double(u.x));
      duy.push_back(rat_to_double(u.y));
    }
    for (const Vec2& v : norm.vertices()) {
      vx.push_back(rat_to_double(v.x));
      vy.push_back(rat_to_double(v.y));
      max_coord = std::max(max_coord, std::fabs(vx.back()));
      max_coord = std::max(max_coord, std::fabs(vy.back()));
    }
  }

  std::size_t size() const { return vx.size(); }

  double gauge(double x, double y) const {
    double best = 0;
    for (std::size_t i = 0; i < dux.size(); ++i)
      best = std::max(best, dux[i] * x + duy[i] * y);
    return best;
  }
};

// Upper value of the Chebyshev radius of {0, p2, p3}: the exact max-gauge
// at a good candidate center. Candidates come from pair midpoints and an
// active-set iteration (solve for the center equalizing the three active
// support functionals, re-derive the active set, repeat). Any center gives
// a sound upper value, so convergence only affects pruning quality.
double chebyshev_radius_approx(const DoubleNorm& dn, double p2x, double p2y,
                               double p3x, double p3y, std::uint64_t /*seed*/) {
  const double px[3] = {0.0, p2x, p3x};
  const double py[3] = {0.0, p2y, p3y};
  const std::size_t m = dn.dux.size();

  auto argmax_gauge = [&](double x, double y, std::size_t& arg) {
    double best = -1e300;
    arg = 0;
    for (std::size_t e = 0; e < m; ++e) {
      double v = dn.dux[e] * x + dn.duy[e] * y;
      if (v > best) {
        best = v;
        arg = e;
      }
    }
    return best;
  };
  auto value_at = [&](double cx, double cy) {
    std::size_t arg;
    double worst = 0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, argmax_gauge(px[i] - cx, py[i] - cy, arg));
    return worst;
  };

  // Pair midpoints (two-point optimum; the third point may or may not fit).
  double best = 1e300;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      best = std::min(best, value_at(0.5 * (px[i] + px[j]), 0.5 * (py[i] + py[j])));

  // Active-set iteration from the centroid.
  double cx = (px[0] + px[1] + px[2]) / 3.0;
  double cy = (py[0] + py[1] + py[2]) / 3.0;
  best = std::min(best, value_at(cx, cy));
  std::size_t prev[3] = {m, m, m};
  for (int iter = 0; iter < 16; ++iter) {
    std::size_t act[3];
    for (int i = 0; i < 3; ++i) argmax_gauge(px[i] - cx, py[i] - cy, act[i]);
    if (act[0] == prev[0] && act[1] == prev[1] && act[2] == prev[2]) break;
    prev[0] = act[0];
    prev[1] = act[1];
    prev[2] = act[2];
    // Solve u_i . c + r = u_i . p_i for (cx, cy, r) by Cramer's rule.
    double a[3][3], b[3];
    for (int i = 0; i < 3; ++i) {
      a[i][0] = dn.dux[act[i]];
      a[i][1] = dn.duy[act[i]];
      a[i][2] = 1.0;
      b[i] = dn.dux[act[i]] * px[i] + dn.duy[act[i]] * py[i];
    }
    double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                 a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                 a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (std::fabs(det) < 1e-14) break;
    auto det3 = [&](int col) {
      double t[3][3];
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t[r][c] = c == col ? b[r] : a[r][c];
      return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
             t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
             t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
    };
    cx = det3(0) / det;
    cy = det3(1) / det;
    best = std::min(best, value_at(cx, cy));
  }
  return best;
}

// Boundary arc from (edge e0, t0) to (edge e1, t1), walked forward.
struct Arc {
  std::size_t e0, e1;
  double t0, t1;
};

struct Box {
  Arc arc;
  double x0, x1, y0, y1;  // p3 rectangle
  double ub = 0;
  double cand_val = 0;
  double ux = 0, uy = 0;    // arc midpoint
  double px = 0, py = 0;    // rectangle midpoint
  double arc_rad = 0, p3_rad = 0;
  long id = 0;
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const {
    if (a.ub != b.ub) return a.ub < b.ub;
    return a.id > b.id;
  }
};

}  // namespace

namespace {

Rat chebyshev_radius_rows(const PolygonalNorm& norm, const std::array<Vec2, 3>& pts,
                          const std::vector<std::vector<Rat>>& rows,
                          std::array<Rat, 2>* center_out) {
  Rat m = 0;
  for (const Vec2& v : norm.vertices()) {
    m = std::max(m, rat_abs(v.x));
    m = std::max(m, rat_abs(v.y));
  }
  for (const Vec2& p : pts) {
    m = std::max(m, rat_abs(p.x));
    m = std::max(m, rat_abs(p.y));
  }
  m = m * 4 + 1;
  std::vector<Rat> lo = {-m, -m, Rat(0)};
  std::vector<Rat> hi = {m, m, m * 8};
  SeidelLp<Rat> lp(Rat(0), 1234577);
  auto sol = lp.solve(3, lo, hi, rows, {Rat(0), Rat(0), Rat(1)});
  if (!sol) throw Error("chebyshev LP unexpectedly infeasible");
  if (center_out) *center_out = {(*sol)[0], (*sol)[1]};
  return (*sol)[2];
}

}  // namespace

Rat chebyshev_radius(const PolygonalNorm& norm, const std::array<Vec2, 3>& pts) {
  std::vector<std::vector<Rat>> rows;
  for (const Vec2& p : pts)
    for (const Vec2& u : norm.dual_vertices())
      rows.push_back({-u.x, -u.y, Rat(-1), -dot(u, p)});
  return chebyshev_radius_rows(norm, pts, rows, nullptr);
}

namespace {

// Exact radius via a reduced LP over the support functionals that score
// highest at an approximate center; verified against the full constraint
// set, with a full re-solve on the (rare) miss.
Rat chebyshev_radius_filtered(const PolygonalNorm& norm, const DoubleNorm& dn,
                              const std::array<Vec2, 3>& pts) {
  const std::size_t m = dn.dux.size();
  const std::size_t keep = std::min<std::size_t>(m, 10);
  double cx = 0, cy = 0;
  for (const Vec2& p : pts) {
    cx += rat_to_double(p.x) / 3;
    cy += rat_to_double(p.y) / 3;
  }
  // One cheap approximate solve to place the center.
  double r0 = chebyshev_radius_approx(dn, rat_to_double(pts[1].x), rat_to_double(pts[1].y),
                                      rat_to_double(pts[2].x), rat_to_double(pts[2].y), 0);
  (void)r0;
  std::vector<std::vector<Rat>> rows;
  std::vector<std::pair<double, std::size_t>> score(m);
  for (const Vec2& p : pts) {
    double px = rat_to_double(p.x) - cx, py = rat_to_double(p.y) - cy;
    for (std::size_t e = 0; e < m; ++e)
      score[e] = {dn.dux[e] * px + dn.duy[e] * py, e};
    std::sort(score.begin(), score.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (std::size_t k = 0; k < keep; ++k) {
      const Vec2& u = norm.dual_vertices()[score[k].second];
      rows.push_back({-u.x, -u.y, Rat(-1), -dot(u, p)});
    }
  }
  std::array<Rat, 2> center;
  Rat r = chebyshev_radius_rows(norm, pts, rows, &center);
  // The reduced optimum is a lower bound; it is exact iff feasible for the
  // full set.
  Vec2 c{center[0], center[1]};
  for (const Vec2& p : pts)
    if (norm.gauge(p - c) > r) return chebyshev_radius(norm, pts);
  return r;
}

}  // namespace

JungResult jung_constant(const PolygonalNorm& norm, double resolution,
                         long max_evaluations) {
  if (resolution <= 0) throw ValidationError("resolution must be positive");
  JungResult res;
  res.witness = {Vec2(Rat(0), Rat(0)), Vec2(Rat(0), Rat(0)), Vec2(Rat(0), Rat(0))};

  const Rat four_thirds(4, 3);
  if (norm.is_parallelogram()) {
    // Jung's theorem: J = 1 exactly iff the ball is a parallelogram.
    res.enclosure = {Rat(1), Rat(1), true};
    const auto& v = norm.vertices();
    res.witness = {Vec2(Rat(0), Rat(0)), v[0] * Rat(-2), v[1] * Rat(-2)};
    return res;
  }

  const auto& verts = norm.vertices();
  const std::size_t n = verts.size();
  DoubleNorm dn(norm);

  // Exact lower bound: vertex-pair triangles (0, 2v_i, 2v_j) are screened
  // in doubles and the best few re-solved exactly. These often attain the
  // true maximum (e.g. affine regular hexagons).
  Rat lo(1);  // the pair {0, 2u} forces radius >= 1 in every norm
  {
    struct Seed {
      double val;
      std::size_t i, j;
    };
    std::vector<Seed> seeds;
    std::uint64_t seed_ctr = 4242;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (dn.gauge(2 * (dn.vx[j] - dn.vx[i]), 2 * (dn.vy[j] - dn.vy[i])) > 2 + 1e-9)
          continue;
        double r = chebyshev_radius_approx(dn, 2 * dn.vx[i], 2 * dn.vy[i],
                                           2 * dn.vx[j], 2 * dn.vy[j], seed_ctr++);
        seeds.push_back({r, i, j});
      }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
      if (a.val != b.val) return a.val > b.val;
      return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    const std::size_t keep = std::min<std::size_t>(seeds.size(), 8);
    for (std::size_t k = 0; k < keep; ++k) {
      Vec2 p2 = verts[seeds[k].i] * Rat(2);
      Vec2 p3 = verts[seeds[k].j] * Rat(2);
      if (norm.gauge(p3 - p2) > 2) continue;
      std::array<Vec2, 3> tri = {Vec2(Rat(0), Rat(0)), p2, p3};
      Rat r = chebyshev_radius_filtered(norm, dn, tri);
      if (r > lo) {
        lo = r;
        res.witness = tri;
      }
    }
  }
  if (lo > four_thirds)
    throw EnclosureError("Bohnenblust clamp violated: certified radius " +
                         rat_to_decimal(lo, 12) + " > 4/3");

  const double slack = 1e-7;
  const double keep_margin = 0.9 * resolution;
  const double promote_margin = std::max(1e-9, 0.1 * keep_margin);
  // Unsuccessful exact certifications raise the bar (the double candidate
  // value is an upper estimate and keeps tripping near the optimum).
  double promote_bar = promote_margin;
  double lod = rat_to_double(lo);

  auto pos_x = [&](std::size_t e, double t) {
    return dn.vx[e] + t * (dn.vx[(e + 1) % n] - dn.vx[e]);
  };
  auto pos_y = [&](std::size_t e, double t) {
    return dn.vy[e] + t * (dn.vy[(e + 1) % n] - dn.vy[e]);
  };

  // Breakpoints of an arc: endpoints plus interior polygon vertices.
  auto arc_points = [&](const Arc& arc) {
    std::vector<std::pair<double, double>> pts;
    pts.push_back({pos_x(arc.e0, arc.t0), pos_y(arc.e0, arc.t0)});
    for (std::size_t e = arc.e0; e != arc.e1; e = (e + 1) % n)
      pts.push_back({dn.vx[(e + 1) % n], dn.vy[(e + 1) % n]});
    pts.push_back({pos_x(arc.e1, arc.t1), pos_y(arc.e1, arc.t1)});
    return pts;
  };

  // p3 bounding rectangle: the lens lives inside 2B.
  double bx0 = 0, bx1 = 0, by0 = 0, by1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bx0 = std::min(bx0, 2 * dn.vx[i]);
    bx1 = std::max(bx1, 2 * dn.vx[i]);
    by0 = std::min(by0, 2 * dn.vy[i]);
    by1 = std::max(by1, 2 * dn.vy[i]);
  }

  std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
  long next_id = 0;
  long evals = 0;
  std::uint64_t lp_seed = 99991;
  double waterline = 1.0;

  auto make_box = [&](Arc arc, double x0, double x1, double y0, double y1) {
    Box b;
    b.arc = arc;
    b.x0 = x0;
    b.x1 = x1;
    b.y0 = y0;
    b.y1 = y1;
    auto pts = arc_points(arc);
    // Arc midpoint: middle breakpoint, or parameter midpoint on one edge.
    if (arc.e0 == arc.e1) {
      double tm = 0.5 * (arc.t0 + arc.t1);
      b.ux = pos_x(arc.e0, tm);
      b.uy = pos_y(arc.e0, tm);
    } else {
      b.ux = pts[pts.size() / 2].first;
      b.uy = pts[pts.size() / 2].second;
    }
    b.px = 0.5 * (x0 + x1);
    b.py = 0.5 * (y0 + y1);
    double arc_rad = 0;
    for (const auto& [x, y] : pts)
      arc_rad = std::max(arc_rad, dn.gauge(x - b.ux, y - b.uy));
    b.arc_rad = arc_rad * (1 + 1e-9) + 1e-12;
    double hx = x1 - b.px, hy = y1 - b.py;
    b.p3_rad = std::max(dn.gauge(hx, hy), dn.gauge(hx, -hy)) * (1 + 1e-9) + 1e-12;

    // Prune: the whole box violates the diameter constraints, or lies in
    // the reflection-redundant half plane cross(u, p3) < 0 (the triangle
    // (0, 2u, p3) is congruent to (0, 2u, 2u - p3)).
    double g1 = dn.gauge(b.px, b.py) - b.p3_rad;
    double g2 = dn.gauge(b.px - 2 * b.ux, b.py - 2 * b.uy) - b.p3_rad - 2 * b.arc_rad;
    bool dead = g1 > 2 + slack || g2 > 2 + slack;
    if (!dead) {
      // cross(u, p3) is bilinear, so its max over arc x rectangle sits at
      // a breakpoint-corner pair.
      double cmax = -1e100;
      for (const auto& [ax, ay] : pts)
        for (double cx : {x0, x1})
          for (double cy : {y0, y1}) cmax = std::max(cmax, ax * cy - ay * cx);
      if (cmax < -1e-9) dead = true;
    }
    if (dead) {
      b.ub = 0;
      b.cand_val = 0;
      b.id = next_id++;
      return b;
    }

    b.cand_val =
        chebyshev_radius_approx(dn, 2 * b.ux, 2 * b.uy, b.px, b.py, lp_seed++);
    ++evals;
    b.ub = b.cand_val + slack + 2 * b.arc_rad + b.p3_rad;
    b.id = next_id++;
    return b;
  };

  auto promote = [&](const Box& b) {
    if (b.cand_val <= lod + promote_bar) return;
    // Rationalize the candidate triangle on a fixed grid (bounded
    // denominators keep the exact LP fast), pull it into the feasible set,
    // then certify with the exact LP. Any diameter <= 2 triangle is a
    // valid witness, so feasibility is all that matters here.
    const long long den = 1LL << 12;
    auto snap = [&](double v) {
      return Rat(static_cast<long long>(std::llround(v * static_cast<double>(den))), den);
    };
    double g2d = dn.gauge(2 * b.ux, 2 * b.uy);
    double s = g2d > 2 ? (2.0 / g2d) * (1 - 1e-12) : 1.0;
    Vec2 p2{snap(2 * b.ux * s), snap(2 * b.uy * s)};
    for (int tries = 0; tries < 6 && norm.gauge(p2) > 2; ++tries)
      p2 = Vec2(snap(rat_to_double(p2.x) * (1 - 1e-7)),
                snap(rat_to_double(p2.y) * (1 - 1e-7)));
    if (norm.gauge(p2) > 2) return;
    Vec2 anchor{p2.x / 2, p2.y / 2};  // strictly feasible for both constraints
    Vec2 p3{snap(b.px), snap(b.py)};
    for (int it = 0; it < 60; ++it) {
      if (norm.gauge(p3) <= 2 && norm.gauge(p3 - p2) <= 2) break;
      p3 = Vec2((p3.x + anchor.x) / 2, (p3.y + anchor.y) / 2);
    }
    if (norm.gauge(p3) > 2 || norm.gauge(p3 - p2) > 2) return;
    ++res.promotions;
    std::array<Vec2, 3> tri = {Vec2(Rat(0), Rat(0)), p2, p3};
    Rat r = chebyshev_radius_filtered(norm, dn, tri);
    if (r > four_thirds)
      throw EnclosureError("Bohnenblust clamp violated: certified radius " +
                           rat_to_decimal(r, 12) + " > 4/3");
    if (r > lo) {
      double gain = rat_to_double(r) - lod;
      lo = r;
      lod = rat_to_double(lo);
      res.witness = tri;
      if (gain >= promote_bar / 2) promote_bar = promote_margin;
    } else {
      promote_bar = std::min(promote_bar * 2, 0.4 * keep_margin);
    }
  };

  // Seed boxes: one per edge of the upper half boundary x full rectangle.
  for (std::size_t e = 0; e < n / 2; ++e) {
    Box b = make_box(Arc{e, e, 0.0, 1.0}, bx0, bx1, by0, by1);
    promote(b);
    if (b.ub > lod + keep_margin)
      queue.push(std::move(b));
    else
      waterline = std::max(waterline, std::min(b.ub, lod + keep_margin));
  }

  while (!queue.empty()) {
    Box top = queue.top();
    if (top.ub <= lod + keep_margin) break;
    queue.pop();
    if (evals > max_evaluations) {
      throw EnclosureError("jung enclosure failure: lo=" + rat_to_decimal(lo, 9) +
                           ", ub=" + std::to_string(top.ub) + " after " +
                           std::to_string(evals) + " evaluations");
    }

    std::vector<Box> children;
    children.reserve(2);
    if (2 * top.arc_rad >= top.p3_rad) {
      // Split the arc at its middle breakpoint or parameter midpoint.
      if (top.arc.e0 == top.arc.e1) {
        double tm = 0.5 * (top.arc.t0 + top.arc.t1);
        children.push_back(make_box(Arc{top.arc.e0, top.arc.e0, top.arc.t0, tm},
                                    top.x0, top.x1, top.y0, top.y1));
        children.push_back(make_box(Arc{top.arc.e0, top.arc.e1, tm, top.arc.t1},
                                    top.x0, top.x1, top.y0, top.y1));
      } else {
        std::size_t span = (top.arc.e1 + n - top.arc.e0) % n;
        std::size_t mid = (top.arc.e0 + (span + 1) / 2) % n;
        children.push_back(make_box(Arc{top.arc.e0, (mid + n - 1) % n, top.arc.t0, 1.0},
                                    top.x0, top.x1, top.y0, top.y1));
        children.push_back(make_box(Arc{mid, top.arc.e1, 0.0, top.arc.t1}, top.x0,
                                    top.x1, top.y0, top.y1));
      }
    } else {
      if (top.x1 - top.x0 >= top.y1 - top.y0) {
        double xm = 0.5 * (top.x0 + top.x1);
        children.push_back(make_box(top.arc, top.x0, xm, top.y0, top.y1));
        children.push_back(make_box(top.arc, xm, top.x1, top.y0, top.y1));
      } else {
        double ym = 0.5 * (top.y0 + top.y1);
        children.push_back(make_box(top.arc, top.x0, top.x1, top.y0, ym));
        children.push_back(make_box(top.arc, top.x0, top.x1, ym, top.y1));
      }
    }
    for (Box& c : children) {
      promote(c);
      if (c.ub > lod + keep_margin)
        queue.push(std::move(c));
      else
        waterline = std::max(waterline, std::min(c.ub, lod + keep_margin));
    }
  }

  double hi_d = std::max(waterline, lod);
  if (!queue.empty()) hi_d = std::max(hi_d, queue.top().ub);
  Rat hi = rat_from_double(hi_d) + Rat(1, 1000000000);
  if (hi > four_thirds) hi = four_thirds;  // Bohnenblust clamp
  if (lo < 1) lo = 1;                      // Jung clamp
  if (hi < lo) hi = lo;                    // exact witness beats the float bound

  res.enclosure = {lo, hi, lo == hi};
  res.evaluations = evals;
  if (rat_to_double(hi - lo) > resolution + 1e-9)
    throw EnclosureError("jung enclosure wider than resolution: [" +
                         rat_to_decimal(lo, 9) + ", " + rat_to_decimal(hi, 9) + "]");
  return res;
}

Enclosure alpha_from_jung(const Enclosure& jung, const Rat& perimeter) {
  Enclosure a;
  a.lo = Rat(1) / (jung.hi * perimeter);
  a.hi = Rat(1) / (jung.lo * perimeter);
  a.exact = jung.exact;
  return a;
}

Enclosure alpha_v(const PolygonalNorm& norm, double jung_resolution) {
  Enclosure jung;
  if (jung_resolution > 0) {
    jung = jung_constant(norm, jung_resolution).enclosure;
  } else {
    jung = {Rat(1), Rat(4, 3), false};
    if (norm.is_parallelogram()) jung = {Rat(1), Rat(1), true};
  }
  return alpha_from_jung(jung, norm.self_perimeter());
}

NormInvariantReport compute_norm_invariants(const PolygonalNorm& norm,
                                            double jung_resolution) {
  NormInvariantReport rep;
  rep.self_perimeter = norm.self_perimeter();
  if (jung_resolution > 0) {
    rep.jung = jung_constant(norm, jung_resolution).enclosure;
  } else {
    rep.jung = {Rat(1), Rat(4, 3), false};
    if (norm.is_parallelogram()) rep.jung = {Rat(1), Rat(1), true};
  }
  rep.alpha_v = alpha_from_jung(rep.jung, rep.self_perimeter);
  for (AreaDefinition mu : {AreaDefinition::hausdorff, AreaDefinition::holmes_thompson,
                            AreaDefinition::mass_star}) {
    rep.densities.emplace(mu, norm.area_density(mu));
    rep.isoperimetric_ratio.emplace(mu, norm.isoperimetric_ratio(mu));
  }
  rep.isoperimetrix_vertices = norm.isoperimetrix();
  return rep;
}

}  // namespace mfill
