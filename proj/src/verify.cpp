#include "mfill/verify.hpp"

#include <algorithm>
#include <cmath>

#include "mfill/cayley.hpp"
#include "mfill/complex2.hpp"
#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/hlambda.hpp"
#include "mfill/jung.hpp"
#include "mfill/profile.hpp"
#include "mfill/rips.hpp"
#include "mfill/rng.hpp"
#include "mfill/substrates.hpp"
#include "mfill/tight_span.hpp"

namespace mfill {

namespace {

std::string dec(const Rat& q) { return rat_to_decimal(q, 12); }

std::string dec(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

PolygonalNorm sweep_norm(std::uint64_t seed, int index) {
  int half = 2 + index % 5;
  return random_symmetric_polygon(half, seed * 1009 + static_cast<std::uint64_t>(index));
}

}  // namespace

void verify_golab(Report& rep, const VerifyOptions& opts) {
  const Rat six(6), eight(8);
  Rat sq = square_norm().self_perimeter();
  rep.check("golab_square_perimeter", "6 <= self_perimeter <= 8; square exact",
            sq == eight, dec(sq), "exact");
  Rat hx = hexagon_norm().self_perimeter();
  rep.check("golab_hexagon_perimeter", "6 <= self_perimeter <= 8; hexagon exact",
            hx == six, dec(hx), "exact");
  Rat ng = euclidean_ngon(32).self_perimeter();
  rep.check("golab_64gon_perimeter", "6 <= self_perimeter <= 8",
            ng >= six && ng <= eight, dec(ng), "exact");
  int violations = 0;
  Rat min_p = eight, max_p = six;
  for (int i = 0; i < opts.sweep_count; ++i) {
    Rat p = sweep_norm(opts.seed, i).self_perimeter();
    if (p < six || p > eight) ++violations;
    min_p = std::min(min_p, p);
    max_p = std::max(max_p, p);
  }
  rep.check("golab_sweep", "6 <= self_perimeter <= 8 on seeded sweep", violations == 0,
            "violations=" + std::to_string(violations) + " min=" + dec(min_p) +
                " max=" + dec(max_p),
            "exact", "count=" + std::to_string(opts.sweep_count));
}

void verify_jung_alpha(Report& rep, const VerifyOptions& opts) {
  const double scale = opts.tolerance_scale;

  JungResult sq = jung_constant(square_norm(), 0.01);
  rep.check("jung_square", "J = 1 exactly for parallelogram balls",
            sq.enclosure.exact && sq.enclosure.lo == 1, dec(sq.enclosure.lo), "exact");
  Enclosure alpha_sq = alpha_v(square_norm(), 0.01);
  rep.check("alpha_square", "alpha = 1/(J * perimeter) = 1/8",
            alpha_sq.exact && alpha_sq.lo == Rat(1, 8), dec(alpha_sq.lo), "exact");

  JungResult hex = jung_constant(hexagon_norm(), 0.008);
  double hex_mid = hex.enclosure.mid();
  rep.check("jung_hexagon", "J(hexagon) = 4/3",
            std::fabs(hex_mid - 4.0 / 3.0) <= 0.01 * scale, dec(hex_mid),
            dec(0.01 * scale),
            "enclosure [" + dec(hex.enclosure.lo) + ", " + dec(hex.enclosure.hi) + "]");
  Enclosure alpha_hex = alpha_from_jung(hex.enclosure, hexagon_norm().self_perimeter());
  rep.check("alpha_hexagon", "1/8 inside the alpha enclosure",
            alpha_hex.lo <= Rat(1, 8) && Rat(1, 8) <= alpha_hex.hi,
            "[" + dec(alpha_hex.lo) + ", " + dec(alpha_hex.hi) + "]", "enclosure");

  PolygonalNorm ngon = euclidean_ngon(32);
  JungResult ng = jung_constant(ngon, 0.008);
  double ng_mid = ng.enclosure.mid();
  const double jung_euclid = 2.0 / std::sqrt(3.0);
  rep.check("jung_64gon", "J(Euclidean) = 2/sqrt(3)",
            std::fabs(ng_mid - jung_euclid) <= 0.01 * scale, dec(ng_mid),
            dec(0.01 * scale),
            "enclosure [" + dec(ng.enclosure.lo) + ", " + dec(ng.enclosure.hi) + "]");
  Enclosure alpha_ng = alpha_from_jung(ng.enclosure, ngon.self_perimeter());
  const double alpha_euclid = std::sqrt(3.0) / (4.0 * M_PI);
  rep.check("alpha_64gon", "alpha(Euclidean) = sqrt(3)/(4 pi)",
            std::fabs(alpha_ng.mid() - alpha_euclid) <= 0.01 * scale, dec(alpha_ng.mid()),
            dec(0.01 * scale));

  // Sweep: the clamp enclosure J in [1, 4/3] suffices for the alpha bound.
  Rat tol = rat_from_double(0.001 * scale);
  Rat bound = Rat(3, 32) - tol;
  Rat min_alpha_lo(-1);
  int violations = 0;
  for (int i = 0; i < opts.sweep_count; ++i) {
    PolygonalNorm norm = sweep_norm(opts.seed, i);
    Enclosure alpha = alpha_v(norm, 0);  // clamp-only enclosure
    if (min_alpha_lo < 0 || alpha.lo < min_alpha_lo) min_alpha_lo = alpha.lo;
    if (alpha.lo < bound) ++violations;
  }
  rep.check("alpha_sweep_floor", "empirical min alpha >= 3/32 - tol", violations == 0,
            "min=" + dec(min_alpha_lo), dec(0.001 * scale),
            "count=" + std::to_string(opts.sweep_count));
}

void verify_density_inequalities(Report& rep, const VerifyOptions& opts) {
  int violations = 0;
  double dmin[3] = {1e9, 1e9, 1e9}, dmax[3] = {0, 0, 0};
  auto check_norm = [&](const PolygonalNorm& norm) {
    PiScalar ht = norm.area_density(AreaDefinition::holmes_thompson);
    PiScalar b = norm.area_density(AreaDefinition::hausdorff);
    PiScalar ms = norm.area_density(AreaDefinition::mass_star);
    if (pi_cmp(ht, b) > 0) ++violations;
    if (pi_cmp(ht, ms) > 0) ++violations;
    const PiScalar* vals[3] = {&b, &ht, &ms};
    for (int k = 0; k < 3; ++k) {
      double v = vals[k]->to_double();
      dmin[k] = std::min(dmin[k], v);
      dmax[k] = std::max(dmax[k], v);
    }
  };
  check_norm(square_norm());
  check_norm(hexagon_norm());
  check_norm(euclidean_ngon(32));
  for (int i = 0; i < opts.sweep_count; ++i) check_norm(sweep_norm(opts.seed, i));
  rep.check("density_inequalities", "mu_ht <= mu_b and mu_ht <= mu_m* (certified)",
            violations == 0, "violations=" + std::to_string(violations), "exact",
            "fixtures + sweep of " + std::to_string(opts.sweep_count));
  rep.info("density_ranges",
           "b=[" + dec(dmin[0]) + ", " + dec(dmax[0]) + "] ht=[" + dec(dmin[1]) + ", " +
               dec(dmax[1]) + "] m*=[" + dec(dmin[2]) + ", " + dec(dmax[2]) + "]");
}

void verify_isoperimetrix(Report& rep, const VerifyOptions& opts) {
  const double scale = opts.tolerance_scale;
  const PiScalar target(Rat(1, 4), -1);  // 1/(4 pi)

  int ht_violations = 0;
  auto check_ht = [&](const PolygonalNorm& norm) {
    if (pi_cmp(norm.isoperimetric_ratio(AreaDefinition::holmes_thompson), target) != 0)
      ++ht_violations;
  };
  check_ht(square_norm());
  check_ht(hexagon_norm());
  check_ht(euclidean_ngon(32));
  for (int i = 0; i < opts.sweep_count; ++i) check_ht(sweep_norm(opts.seed, i));
  rep.check("isoperimetrix_ht_equality",
            "Holmes-Thompson isoperimetric ratio = 1/(4 pi) exactly",
            ht_violations == 0, "violations=" + std::to_string(ht_violations), "1e-12",
            "equality is exact; the 1e-12 budget is trivially met");

  PiScalar sq_ms = square_norm().isoperimetric_ratio(AreaDefinition::mass_star);
  // Strict excess: ratio - 1e-3 must still be above 1/(4 pi).
  PiScalar sq_shifted(sq_ms.coeff - rat_from_double(0.001 * scale), sq_ms.pi_exp);
  rep.check("isoperimetrix_mass_star_square",
            "mass* ratio of the square exceeds 1/(4 pi) by more than 1e-3",
            sq_ms.is_rational() && pi_cmp(sq_shifted, target) > 0 &&
                sq_ms.coeff == Rat(1, 8),
            dec(sq_ms.coeff), dec(0.001 * scale), "exact value 1/8");

  PiScalar ng_ms = euclidean_ngon(32).isoperimetric_ratio(AreaDefinition::mass_star);
  PiScalar up(ng_ms.coeff - rat_from_double(0.001 * scale), ng_ms.pi_exp);
  PiScalar dn(ng_ms.coeff + rat_from_double(0.001 * scale), ng_ms.pi_exp);
  rep.check("isoperimetrix_mass_star_64gon",
            "mass* ratio of the Euclidean 64-gon within 1e-3 of 1/(4 pi)",
            pi_cmp(up, target) < 0 && pi_cmp(dn, target) > 0, dec(ng_ms.to_double()),
            dec(0.001 * scale));

  int ms_floor_violations = 0;
  for (int i = 0; i < opts.sweep_count; ++i) {
    PolygonalNorm norm = sweep_norm(opts.seed, i);
    PiScalar r = norm.isoperimetric_ratio(AreaDefinition::mass_star);
    if (pi_cmp(r, target) < 0) ++ms_floor_violations;
    PiScalar rb = norm.isoperimetric_ratio(AreaDefinition::hausdorff);
    if (pi_cmp(rb, target) < 0) ++ms_floor_violations;
  }
  rep.check("isoperimetrix_floor_sweep",
            "isoperimetric ratios >= 1/(4 pi) for all area definitions",
            ms_floor_violations == 0, "violations=" + std::to_string(ms_floor_violations),
            "exact");
}

void verify_katz(Report& rep, const VerifyOptions& opts) {
  const double scale = opts.tolerance_scale;
  FiniteMetricSpace circle = circle_chord_metric(60);
  Loop loop = full_cycle_loop(60);
  Rat rips = rips_filling_radius(circle, loop);
  double target = std::sqrt(3.0) / 2.0;
  rep.check("katz_rips_fillrad", "FillRad of the unit circle in sup norm = sqrt(3)/2",
            std::fabs(rat_to_double(rips) - target) <= 0.05 * scale,
            dec(rat_to_double(rips)), dec(0.05 * scale));
  Rat direct = kuratowski_filling_radius(circle, loop);
  rep.check("katz_route_agreement",
            "Rips route and Kuratowski-neighborhood route agree",
            std::fabs(rat_to_double(direct - rips)) <= 0.05 * scale,
            dec(rat_to_double(direct)), dec(0.05 * scale));
}

void verify_profile(Report& rep, const VerifyOptions& opts) {
  const double scale = opts.tolerance_scale;

  PlanePatch patch = plane_patch(Rat(26), Rat(1, 2));
  long center = 26;  // lattice units: the patch middle, even parity
  std::vector<Loop> loops;
  for (long r = 4; r <= 12; ++r) {
    long a = 2 * r;
    long k = octagon_regular_cut(a, (center + center) % 2);
    loops.push_back(octagon_loop(patch, center, center, a, k));
  }
  ProfileResult euclid = isoperimetric_profile(patch.complex, loops);
  const double target = 1.0 / (4.0 * M_PI);
  rep.check("profile_euclid_fit",
            "fitted fill/length^2 coefficient near 1/(4 pi) on the flat patch",
            std::fabs(euclid.fitted_coefficient - target) <= 0.15 * scale * target,
            dec(euclid.fitted_coefficient), dec(0.15 * scale * target),
            "verdict=" + euclid.verdict);

  HyperbolicBall ball = hyperbolic_ball(5);
  std::vector<Loop> rings;
  for (const auto& ring : ball.rings) {
    Loop ring_loop;
    ring_loop.vertices = ring;
    rings.push_back(std::move(ring_loop));
  }
  ProfileResult hyp = isoperimetric_profile(ball.complex, rings);
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < hyp.entries.size(); ++i)
    if (hyp.entries[i + 1].ratio >= hyp.entries[i].ratio) decreasing = false;
  double final_ratio = hyp.entries.empty() ? 1.0 : hyp.entries.back().ratio;
  rep.check("profile_hyperbolic_decay",
            "order-7 tiling ratio series strictly decreasing, final < half the flat fit",
            decreasing && final_ratio < 0.5 * euclid.fitted_coefficient,
            "final=" + dec(final_ratio), "",
            "verdict=" + hyp.verdict + " entries=" + std::to_string(hyp.entries.size()));
}

void verify_hlambda(Report& rep, const VerifyOptions& opts) {
  const double lambda = 8.0;
  bool grid_ok = true;
  std::string grid_vals;
  for (int r : {8, 16, 32}) {
    Graph g = grid_graph(static_cast<std::size_t>(r + 1));
    Loop loop = grid_boundary_loop(static_cast<std::size_t>(r + 1));
    HLambdaResult res = h_lambda_estimate(g, loop, lambda, r, 4);
    grid_vals += (grid_vals.empty() ? "" : ", ") + dec(res.value);
    if (res.value < 0.4) grid_ok = false;
    if (res.value > res.cap * 1.000001) grid_ok = false;
  }
  rep.check("hlambda_grid_floor", "flat grids keep H_lambda bounded away from 0",
            grid_ok, grid_vals, "0.4 <= value <= lambda^4");

  bool tree_ok = true;
  double prev = 1e9;
  std::string tree_vals;
  for (int r : {8, 16, 32}) {
    Graph g = binary_tree_graph(std::min(r, 12));
    Loop loop = tree_out_and_back_loop(std::min(r, 12));
    HLambdaResult res = h_lambda_estimate(g, loop, lambda, r, 4);
    tree_vals += (tree_vals.empty() ? "" : ", ") + dec(res.value);
    if (res.value > 0.05) tree_ok = false;
    if (res.value > prev + 1e-12) tree_ok = false;
    prev = res.value;
  }
  rep.check("hlambda_tree_decay", "tree loops collapse (H_lambda -> 0 side)",
            tree_ok, tree_vals, "<= 0.05, non-increasing");
}

void verify_hyperbolicity(Report& rep, const VerifyOptions& opts) {
  Graph tree = binary_tree_graph(4);
  Rat tree_delta = four_point_delta(graph_metric(tree));
  rep.check("delta_tree", "four-point delta of a tree = 0", tree_delta == 0,
            dec(tree_delta), "exact");

  Rat slim = slim_triangle_delta(cycle_graph(6), 100000);
  rep.check("delta_slim_6cycle", "slim-triangle constant of the unit 6-cycle = 1",
            slim == 1, dec(slim), "exact");

  bool increasing = true;
  std::string vals;
  Rat prev(-1);
  for (std::size_t n = 3; n <= 8; ++n) {
    Rat d = four_point_delta(graph_metric(grid_graph(n)));
    vals += (vals.empty() ? "" : ", ") + dec(d);
    if (d <= prev) increasing = false;
    prev = d;
  }
  rep.check("delta_grid_growth", "four-point delta strictly increasing on n x n grids",
            increasing, vals, "exact");
}

void verify_structural(Report& rep, const VerifyOptions& opts) {
  // Kuratowski isometry, exhaustively on random 8-point metrics.
  bool kuratowski_ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    FiniteMetricSpace m = random_metric(8, opts.seed * 31 + trial);
    EmbeddedPointSet emb = kuratowski_embed(m, m.labels()[0]);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (emb.sup_distance(i, j) != m.distance(i, j)) kuratowski_ok = false;
  }
  rep.check("kuratowski_isometry", "sup-norm embedding reproduces d exactly",
            kuratowski_ok, kuratowski_ok ? "all 28 pairs x 5 spaces" : "mismatch",
            "exact");

  // Tight span of a 3-point space: exact tripod legs.
  {
    std::vector<std::vector<Rat>> d = {{Rat(0), Rat(3), Rat(4)},
                                       {Rat(3), Rat(0), Rat(5)},
                                       {Rat(4), Rat(5), Rat(0)}};
    FiniteMetricSpace m({"a", "b", "c"}, d);
    TightSpanResult ts = tight_span(m, Rat(1, 4));
    std::vector<Rat> steiner = {Rat(1), Rat(2), Rat(3)};
    std::size_t si = ts.functions.size();
    for (std::size_t i = 0; i < ts.functions.size(); ++i)
      if (ts.functions[i] == steiner) si = i;
    bool legs_ok = si < ts.functions.size();
    if (legs_ok)
      for (std::size_t i = 0; i < 3; ++i)
        if (ts.space.distance(ts.anchor_indices[i], si) != steiner[i]) legs_ok = false;
    rep.check("tight_span_tripod", "tripod legs (1,2,3) for d = (3,4,5), exact",
              legs_ok, legs_ok ? "legs 1, 2, 3" : "steiner point missing", "exact");
  }

  // LP duality and homogeneity on random cycles.
  {
    PlanePatch patch = plane_patch(Rat(6), Rat(1, 2));
    SimplicialComplex2 oct = octahedron();
    Rng rng(opts.seed * 77 + 5);
    bool dual_ok = true, homog_ok = true, subadd_ok = true;
    int cases = 0;
    auto run_case = [&](const SimplicialComplex2& k, const Chain& z) {
      if (z.coeffs.empty()) return false;
      FillResult fill = min_filling_area(k, z, FillMode::relaxed);
      ++cases;
      // Dual feasibility and objective match, exact.
      Rat dual_obj = 0;
      for (const auto& [e, c] : z.coeffs) dual_obj += fill.dual[e] * c;
      if (dual_obj != fill.area) dual_ok = false;
      for (std::size_t t = 0; t < k.triangles().size(); ++t) {
        Rat acc = 0;
        for (const auto& [e, s] : k.triangle_edges(t)) acc += Rat(s) * fill.dual[e];
        if (rat_abs(acc) > k.weights()[t]) dual_ok = false;
      }
      FillResult doubled = min_filling_area(k, z.scaled(Rat(2)), FillMode::relaxed);
      if (doubled.area != fill.area * 2) homog_ok = false;
      FillResult negated = min_filling_area(k, z.scaled(Rat(-3)), FillMode::relaxed);
      if (negated.area != fill.area * 3) homog_ok = false;
      return true;
    };
    for (int trial = 0; cases < 46 && trial < 400; ++trial) {
      // Random rectangle region boundary on the patch.
      long m = patch.cells_per_side;
      long x0 = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m - 2)));
      long y0 = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m - 2)));
      long x1 = x0 + 1 + static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m - x0 - 1)));
      long y1 = y0 + 1 + static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m - y0 - 1)));
      Chain c2;
      c2.dim = 2;
      for (std::size_t t = 0; t < patch.complex.triangles().size(); ++t) {
        const auto& tri = patch.complex.triangles()[t];
        bool inside = true;
        for (int c = 0; c < 3; ++c) {
          Rat x = patch.complex.coords()[tri[static_cast<std::size_t>(c)]][0];
          Rat y = patch.complex.coords()[tri[static_cast<std::size_t>(c)]][1];
          if (x < patch.mesh * x0 || x > patch.mesh * x1 || y < patch.mesh * y0 ||
              y > patch.mesh * y1)
            inside = false;
        }
        if (inside) c2.add(t, Rat(rng.next_int(-3, 3)));
      }
      run_case(patch.complex, patch.complex.boundary(c2));
    }
    for (int done = 0, trial = 0; done < 4 && trial < 64; ++trial) {
      Chain c2;
      c2.dim = 2;
      for (std::size_t t = 0; t < oct.triangles().size(); ++t)
        c2.add(t, Rat(rng.next_int(-2, 2)));
      if (run_case(oct, oct.boundary(c2))) ++done;
    }
    // Subadditivity on a pair of octagon loops.
    Chain z1 = patch.complex.loop_chain(octagon_loop(patch, 6, 6, 4, 2));
    Chain z2 = patch.complex.loop_chain(octagon_loop(patch, 7, 7, 4, 2));
    Chain sum = z1;
    for (const auto& [e, c] : z2.coeffs) sum.add(e, c);
    Rat f1 = min_filling_area(patch.complex, z1, FillMode::relaxed).area;
    Rat f2 = min_filling_area(patch.complex, z2, FillMode::relaxed).area;
    Rat fs = min_filling_area(patch.complex, sum, FillMode::relaxed).area;
    if (fs > f1 + f2) subadd_ok = false;
    rep.check("fill_lp_duality", "dual certificate matches the optimum exactly",
              dual_ok, "cases=" + std::to_string(cases), "exact (<= 1e-9 budget)");
    rep.check("fill_lp_homogeneity", "fill(k z) = |k| fill(z), exact", homog_ok,
              "cases=" + std::to_string(cases), "exact");
    rep.check("fill_lp_subadditivity", "fill(z1+z2) <= fill(z1) + fill(z2)", subadd_ok,
              dec(fs) + " <= " + dec(f1 + f2), "exact");
  }

  // Boundary operators: dd = 0 on every generated complex, octahedron rank.
  {
    bool dd_ok = true;
    auto check_dd = [&](const SimplicialComplex2& k) {
      for (std::size_t t = 0; t < k.triangles().size(); ++t) {
        Chain c2;
        c2.dim = 2;
        c2.add(t, Rat(1));
        if (!k.boundary(k.boundary(c2)).coeffs.empty()) dd_ok = false;
      }
    };
    check_dd(plane_patch(Rat(3), Rat(1, 2)).complex);
    check_dd(hyperbolic_ball(3).complex);
    check_dd(octahedron());
    check_dd(cylinder_complex(8, Rat(2), true));
    rep.check("boundary_dd_zero", "d1 . d2 = 0 on every generated complex", dd_ok,
              dd_ok ? "4 substrates" : "violation", "exact");
    std::size_t rank = boundary2_rank(octahedron());
    rep.check("octahedron_rank", "rank(d2) = 7 on the octahedron", rank == 7,
              std::to_string(rank), "exact");
  }

  // Cayley ball counts.
  {
    GroupPresentation z2{{"a", "b"}, {"abAB"}};
    GroupPresentation f2{{"a", "b"}, {}};
    bool counts_ok = true;
    std::string details;
    for (int r = 0; r <= 5; ++r) {
      std::size_t zn = cayley_ball(z2, r).size();
      std::size_t expect_z = static_cast<std::size_t>(2 * r * r + 2 * r + 1);
      std::size_t fn = cayley_ball(f2, r).size();
      std::size_t expect_f =
          r == 0 ? 1 : static_cast<std::size_t>(1 + 2 * (std::pow(3, r) - 1));
      if (zn != expect_z || fn != expect_f) counts_ok = false;
      details += "r" + std::to_string(r) + ":" + std::to_string(zn) + "/" +
                 std::to_string(fn) + " ";
    }
    rep.check("cayley_ball_counts",
              "Z^2 balls 2r^2+2r+1 and F_2 balls 1+2(3^r-1), r <= 5", counts_ok,
              details, "exact");
  }
}

void verify_determinism(Report& rep, const VerifyOptions& opts) {
  Report a("determinism-probe", Json::object());
  Report b("determinism-probe", Json::object());
  verify_golab(a, opts);
  verify_golab(b, opts);
  verify_jung_alpha(a, opts);
  verify_jung_alpha(b, opts);
  bool same = a.to_json().dump() == b.to_json().dump();
  rep.check("determinism_reruns", "identical seeds give byte-identical items", same,
            same ? "byte-identical" : "mismatch", "exact");
}

Report run_verify(const VerifyOptions& opts) {
  Json config;
  config["suite"] = opts.suite;
  config["seed"] = opts.seed;
  config["tolerance_scale"] = opts.tolerance_scale;
  config["sweep_count"] = opts.sweep_count;
  Report rep("verify " + opts.suite, config);
  verify_golab(rep, opts);
  verify_jung_alpha(rep, opts);
  verify_density_inequalities(rep, opts);
  verify_isoperimetrix(rep, opts);
  verify_katz(rep, opts);
  verify_profile(rep, opts);
  verify_hlambda(rep, opts);
  if (opts.suite != "constants") {
    verify_hyperbolicity(rep, opts);
    verify_structural(rep, opts);
    verify_determinism(rep, opts);
  }
  return rep;
}

}  // namespace mfill
