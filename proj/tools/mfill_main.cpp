#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "mfill/errors.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/hlambda.hpp"
#include "mfill/io.hpp"
#include "mfill/jung.hpp"
#include "mfill/profile.hpp"
#include "mfill/report.hpp"
#include "mfill/rips.hpp"
#include "mfill/tight_span.hpp"
#include "mfill/verify.hpp"

namespace {

using namespace mfill;

struct CommonFlags {
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 7;
  double tolerance_scale = 1.0;
  std::string mu = "ht";
  std::string mesh = "1/8";
  double resolution = 0.01;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out, "write the machine-readable report here");
  cmd->add_option("--format", flags.format, "console format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", flags.seed, "seed for randomized runs");
  cmd->add_option("--tolerance-scale", flags.tolerance_scale,
                  "scales every tolerance budget (0.1 = ten times stricter)");
  cmd->add_option("--mu", flags.mu, "area definition: b|ht|m*");
  cmd->add_option("--mesh", flags.mesh, "mesh size (rational, e.g. 1/8)");
  cmd->add_option("--resolution", flags.resolution, "enclosure resolution");
}

int emit(Report& rep, const CommonFlags& flags,
         std::chrono::steady_clock::time_point t0) {
  using ms = std::chrono::duration<double, std::milli>;
  double wall = ms(std::chrono::steady_clock::now() - t0).count();
  if (!flags.out.empty()) write_text_file(flags.out, rep.to_json().dump(2) + "\n");
  if (flags.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  // Timing stays on the console channel so reports are byte-deterministic.
  std::cerr << "wall time: " << static_cast<long>(wall) << " ms\n";
  return rep.all_passed() ? 0 : 1;
}

Json load_input(Report& rep, const std::string& path) {
  std::string text = read_text_file(path);
  rep.add_input(path, content_digest(text));
  return Json::parse(text);
}

PolygonalNorm load_norm(Report& rep, const std::string& path) {
  return polygon_from_json(load_input(rep, path));
}

Graph load_graph(Report& rep, const std::string& path) {
  return graph_from_json(load_input(rep, path));
}

FiniteMetricSpace load_metric_any(Report& rep, const std::string& path) {
  std::string text = read_text_file(path);
  rep.add_input(path, content_digest(text));
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return metric_from_csv(text);
  Json j = Json::parse(text);
  if (j.contains("edges")) return graph_metric(graph_from_json(j));
  return metric_from_json(j);
}

std::string pi_str(const PiScalar& s) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", s.to_double());
  std::string out = buf;
  if (s.pi_exp != 0) out += " (= " + pi_scalar_to_string(s) + ")";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mfill: polygonal Minkowski geometry, hyperbolicity diagnostics, and "
               "discrete filling problems"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input, input2;
  std::string basepoint;
  std::string suite = "all";
  std::string mode = "relaxed";
  std::string svg_path;
  int count = 200;
  int radius = 3;
  double lambda = 8, rparam = 8;
  int rounds = 4;
  std::string delta = "1/2";

  auto t0 = std::chrono::steady_clock::now();

  // ---- norm ----------------------------------------------------------
  CLI::App* norm = app.add_subcommand("norm", "polygonal norm invariants");
  norm->require_subcommand(1);
  std::vector<CLI::App*> norm_subs;
  for (const char* name : {"perimeter", "dual", "density", "isoperimetrix", "jung",
                           "alpha", "sweep"}) {
    CLI::App* sub = norm->add_subcommand(name);
    if (std::string(name) != "sweep")
      sub->add_option("input", input, "polygon JSON file")->required();
    add_common(sub, flags);
    if (std::string(name) == "sweep") sub->add_option("--count", count, "sweep size");
    norm_subs.push_back(sub);
  }

  // ---- metric --------------------------------------------------------
  CLI::App* metric = app.add_subcommand("metric", "finite metric spaces and graphs");
  metric->require_subcommand(1);
  for (const char* name : {"delta", "embed", "tightspan", "thicken", "cayley"}) {
    CLI::App* sub = metric->add_subcommand(name);
    sub->add_option("input", input, "input file")->required();
    add_common(sub, flags);
    if (std::string(name) == "embed")
      sub->add_option("--basepoint", basepoint, "basepoint label");
    if (std::string(name) == "thicken")
      sub->add_option("--delta", delta, "net separation (rational)");
    if (std::string(name) == "cayley")
      sub->add_option("--radius", radius, "word length radius");
  }

  // ---- fill ----------------------------------------------------------
  CLI::App* fill = app.add_subcommand("fill", "chains, fillings, filling radii");
  fill->require_subcommand(1);
  for (const char* name : {"area", "radius", "rips", "profile", "hlambda", "semiell"}) {
    CLI::App* sub = fill->add_subcommand(name);
    sub->add_option("input", input, "first input file")->required();
    if (std::string(name) == "area" || std::string(name) == "radius" ||
        std::string(name) == "profile" || std::string(name) == "hlambda" ||
        std::string(name) == "semiell")
      sub->add_option("input2", input2, "second input file");
    add_common(sub, flags);
    if (std::string(name) == "area")
      sub->add_option("--mode", mode, "relaxed|integral")
          ->check(CLI::IsMember({"relaxed", "integral"}));
    if (std::string(name) == "profile")
      sub->add_option("--svg", svg_path, "write the ratio plot here");
    if (std::string(name) == "hlambda") {
      sub->add_option("--lambda", lambda, "Lipschitz budget");
      sub->add_option("--r", rparam, "scale parameter");
      sub->add_option("--rounds", rounds, "alternating rounds");
    }
  }

  // ---- verify --------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance matrix");
  verify->add_option("suite", suite, "constants|all")
      ->check(CLI::IsMember({"constants", "all"}));
  add_common(verify, flags);
  verify->add_option("--count", count, "sweep size");

  CLI11_PARSE(app, argc, argv);

  try {
    // ---------------- norm ----------------
    if (norm->parsed()) {
      std::string sub = norm->get_subcommands().front()->get_name();
      Json config;
      config["seed"] = flags.seed;
      Report rep("norm " + sub, config);
      if (sub == "sweep") {
        VerifyOptions vo{"constants", flags.seed, flags.tolerance_scale, count};
        verify_golab(rep, vo);
        verify_jung_alpha(rep, vo);
        verify_density_inequalities(rep, vo);
        verify_isoperimetrix(rep, vo);
        return emit(rep, flags, t0);
      }
      PolygonalNorm n = load_norm(rep, input);
      if (sub == "perimeter") {
        Rat p = n.self_perimeter();
        rep.check("self_perimeter", "6 <= perimeter <= 8 (theorem range)",
                  p >= 6 && p <= 8, rat_to_decimal(p, 15), "exact");
      } else if (sub == "dual") {
        PolygonalNorm d = n.polar_dual();
        rep.set_payload(polygon_to_json(d.vertices()));
        PolygonalNorm dd = d.polar_dual();
        rep.check("polarity_involution", "dual of dual = original",
                  dd.vertices() == n.vertices(), "round trip", "exact");
      } else if (sub == "density") {
        for (AreaDefinition mu : {AreaDefinition::hausdorff,
                                  AreaDefinition::holmes_thompson,
                                  AreaDefinition::mass_star})
          rep.info(std::string("density_") + area_definition_name(mu),
                   pi_str(n.area_density(mu)));
        // Full invariant bundle (clamp-only Jung enclosure: cheap).
        rep.set_payload(norm_invariants_to_json(compute_norm_invariants(n, 0)));
      } else if (sub == "isoperimetrix") {
        rep.set_payload(polygon_to_json(n.isoperimetrix()));
        AreaDefinition mu = area_definition_from_string(flags.mu);
        PiScalar ratio = n.isoperimetric_ratio(mu);
        rep.info(std::string("isoperimetric_ratio_") + area_definition_name(mu),
                 pi_str(ratio));
        PiScalar target(Rat(1, 4), -1);
        rep.check("isoperimetric_ratio_floor", "ratio >= 1/(4 pi)",
                  pi_cmp(ratio, target) >= 0, pi_str(ratio), "exact");
        if (mu == AreaDefinition::holmes_thompson)
          rep.check("holmes_thompson_equality", "ratio = 1/(4 pi) exactly",
                    pi_cmp(ratio, target) == 0, pi_str(ratio), "1e-12");
      } else if (sub == "jung") {
        JungResult j = jung_constant(n, flags.resolution);
        rep.info("jung_enclosure", "[" + rat_to_decimal(j.enclosure.lo, 12) + ", " +
                                       rat_to_decimal(j.enclosure.hi, 12) + "]");
        rep.check("bohnenblust", "1 <= J <= 4/3",
                  j.enclosure.lo >= 1 && j.enclosure.hi <= Rat(4, 3),
                  rat_to_decimal(j.enclosure.lo, 9), "exact");
      } else if (sub == "alpha") {
        Enclosure a = alpha_v(n, flags.resolution);
        rep.info("alpha_enclosure", "[" + rat_to_decimal(a.lo, 12) + ", " +
                                        rat_to_decimal(a.hi, 12) + "]" +
                                        (a.exact ? " (exact)" : ""));
        rep.check("alpha_floor", "alpha >= 3/32", a.lo >= Rat(3, 32),
                  rat_to_decimal(a.lo, 12), "exact");
      }
      return emit(rep, flags, t0);
    }

    // ---------------- metric ----------------
    if (metric->parsed()) {
      std::string sub = metric->get_subcommands().front()->get_name();
      Json config;
      config["seed"] = flags.seed;
      Report rep("metric " + sub, config);
      if (sub == "delta") {
        std::string text = read_text_file(input);
        rep.add_input(input, content_digest(text));
        bool is_graph = false;
        FiniteMetricSpace m({"x"}, {{Rat(0)}}, FiniteMetricSpace::Trusted{});
        if (input.size() >= 4 && input.substr(input.size() - 4) == ".csv") {
          m = metric_from_csv(text);
        } else {
          Json j = Json::parse(text);
          if (j.contains("edges")) {
            is_graph = true;
            Graph g = graph_from_json(j);
            m = graph_metric(g);
            Rat slim = slim_triangle_delta(g, 20000);
            rep.info("slim_triangle_delta_lower_bound", rat_to_decimal(slim, 12));
          } else {
            m = metric_from_json(j);
          }
        }
        Rat d4 = four_point_delta(m);
        rep.info("four_point_delta", rat_to_decimal(d4, 12));
        (void)is_graph;
      } else if (sub == "embed") {
        FiniteMetricSpace m = load_metric_any(rep, input);
        std::string base = basepoint.empty() ? m.labels()[0] : basepoint;
        EmbeddedPointSet emb = kuratowski_embed(m, base);
        bool exact = true;
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = i + 1; j < m.size(); ++j)
            if (emb.sup_distance(i, j) != m.distance(i, j)) exact = false;
        rep.check("kuratowski_isometry", "sup distances reproduce d exactly", exact,
                  exact ? "isometric" : "mismatch", "exact");
        Json coords = Json::array();
        for (const auto& row : emb.coords) {
          Json r = Json::array();
          for (const Rat& v : row) r.push_back(rat_to_json(v));
          coords.push_back(std::move(r));
        }
        Json payload;
        payload["labels"] = emb.labels;
        payload["coords"] = std::move(coords);
        rep.set_payload(std::move(payload));
      } else if (sub == "tightspan") {
        FiniteMetricSpace m = load_metric_any(rep, input);
        TightSpanResult ts = tight_span(m, rat_from_string(flags.mesh));
        rep.info("sample_count", std::to_string(ts.functions.size()));
        bool extremal = true;
        for (const auto& f : ts.functions)
          if (!is_extremal_function(m, f)) extremal = false;
        rep.check("extremality_identity", "f(x) = max_y d(x,y) - f(y) for every sample",
                  extremal, extremal ? "all samples" : "violation", "exact");
        bool copy_ok = true;
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = i + 1; j < m.size(); ++j)
            if (ts.space.distance(ts.anchor_indices[i], ts.anchor_indices[j]) !=
                m.distance(i, j))
              copy_ok = false;
        rep.check("isometric_copy", "the anchors reproduce the input distances",
                  copy_ok, copy_ok ? "isometric" : "mismatch", "exact");
        rep.set_payload(metric_to_json(ts.space));
      } else if (sub == "thicken") {
        Graph g = load_graph(rep, input);
        ThickeningResult th = delta_thickening(g, rat_from_string(delta));
        bool iso = true;
        FiniteMetricSpace base = graph_metric(g);
        for (std::size_t i = 0; i < g.size(); ++i)
          for (std::size_t j = i + 1; j < g.size(); ++j)
            if (th.space.distance(th.original_indices[i], th.original_indices[j]) !=
                base.distance(i, j))
              iso = false;
        rep.check("original_isometry", "original vertex distances preserved exactly",
                  iso, iso ? "isometric" : "mismatch", "exact");
        rep.info("net_size", std::to_string(th.net.size()));
        rep.info("point_count", std::to_string(th.space.size()));
        rep.info("max_envelope_diameter",
                 rat_to_decimal(th.max_envelope_diameter, 12));
        rep.info("four_point_delta",
                 rat_to_decimal(four_point_delta(th.space), 12));
        rep.set_payload(metric_to_json(th.space));
      } else if (sub == "cayley") {
        Json j = load_input(rep, input);
        GroupPresentation p = presentation_from_json(j);
        Graph ball = cayley_ball(p, radius);
        rep.info("vertex_count", std::to_string(ball.size()));
        rep.info("edge_count", std::to_string(ball.edges().size()));
        rep.set_payload(graph_to_json(ball));
      }
      return emit(rep, flags, t0);
    }

    // ---------------- fill ----------------
    if (fill->parsed()) {
      std::string sub = fill->get_subcommands().front()->get_name();
      Json config;
      config["seed"] = flags.seed;
      Report rep("fill " + sub, config);
      if (sub == "area") {
        SimplicialComplex2 k = complex_from_json(load_input(rep, input));
        if (input2.empty()) throw ValidationError("fill area needs a loop/chain file");
        Json zj = load_input(rep, input2);
        Chain z = zj.contains("coeffs") ? chain_from_json(zj)
                                        : k.loop_chain(loop_from_json(zj));
        FillResult res = min_filling_area(
            k, z, mode == "integral" ? FillMode::integral : FillMode::relaxed);
        rep.info("fill_area", rat_to_decimal(res.area, 15));
        rep.set_payload(chain_to_json(res.filling));
      } else if (sub == "radius") {
        SimplicialComplex2 k = complex_from_json(load_input(rep, input));
        if (input2.empty()) throw ValidationError("fill radius needs a loop/chain file");
        Json zj = load_input(rep, input2);
        Chain z = zj.contains("coeffs") ? chain_from_json(zj)
                                        : k.loop_chain(loop_from_json(zj));
        Rat r = filling_radius(k, z);
        rep.info("filling_radius", rat_to_decimal(r, 15));
      } else if (sub == "rips") {
        Json j = load_input(rep, input);
        FiniteMetricSpace m = j.contains("metric") ? metric_from_json(j.at("metric"))
                                                   : metric_from_json(j);
        Loop loop = loop_from_json(j.contains("loop") ? j.at("loop") : j);
        Rat rips = rips_filling_radius(m, loop);
        rep.info("rips_filling_radius", rat_to_decimal(rips, 12));
        Rat direct = kuratowski_filling_radius(m, loop);
        rep.check("route_agreement",
                  "Rips and Kuratowski-neighborhood routes agree",
                  rat_abs(direct - rips) <= rat_from_double(0.05 * flags.tolerance_scale),
                  rat_to_decimal(direct, 12), rat_to_decimal(rat_from_double(0.05 * flags.tolerance_scale), 6));
      } else if (sub == "profile") {
        SimplicialComplex2 k = complex_from_json(load_input(rep, input));
        if (input2.empty()) throw ValidationError("fill profile needs a loops file");
        Json lj = load_input(rep, input2);
        std::vector<Loop> loops;
        for (const auto& l : lj.at("loops")) loops.push_back(loop_from_json(l));
        ProfileResult prof = isoperimetric_profile(k, loops);
        Json series = Json::array();
        std::vector<std::pair<double, double>> pts;
        for (const auto& e : prof.entries) {
          Json row;
          row["length"] = e.length;
          row["fill_area"] = e.fill_area;
          row["ratio"] = e.ratio;
          if (e.skipped) row["skipped"] = e.note;
          series.push_back(std::move(row));
          if (!e.skipped) pts.push_back({e.length, e.ratio});
        }
        Json payload;
        payload["series"] = std::move(series);
        payload["fitted_coefficient"] = prof.fitted_coefficient;
        payload["verdict"] = prof.verdict;
        rep.set_payload(std::move(payload));
        rep.info("fitted_coefficient", std::to_string(prof.fitted_coefficient));
        rep.info("verdict", prof.verdict);
        std::string svg = svg_ratio_plot(pts, "loop length", "fill area / length^2",
                                         1.0 / (4.0 * M_PI), "1/(4 pi)");
        std::string path = svg_path.empty() ? "profile.svg" : svg_path;
        write_text_file(path, svg);
        rep.info("svg", path);
      } else if (sub == "hlambda") {
        Graph g = load_graph(rep, input);
        if (input2.empty()) throw ValidationError("fill hlambda needs a loop file");
        Loop loop = loop_from_json(load_input(rep, input2));
        HLambdaResult res = h_lambda_estimate(g, loop, lambda, rparam, rounds);
        rep.info("h_lambda_lower_bound", std::to_string(res.value));
        rep.check("a_priori_cap", "value <= lambda^4",
                  res.value <= res.cap * (1 + 1e-9), std::to_string(res.value),
                  "lambda^4 = " + std::to_string(res.cap));
      } else if (sub == "semiell") {
        PolygonalNorm n = load_norm(rep, input);
        if (input2.empty()) throw ValidationError("fill semiell needs a region file");
        Json rj = load_input(rep, input2);
        std::vector<Vec2> region;
        for (const auto& v : rj.at("vertices"))
          region.push_back(Vec2(rat_from_json(v[0]), rat_from_json(v[1])));
        AreaDefinition mu = area_definition_from_string(flags.mu);
        if (mu == AreaDefinition::hausdorff)
          rep.info("note", "hausdorff semi-ellipticity mode is experimental");
        SemiEllipticityResult res = semi_ellipticity_check(
            n, region, rat_from_string(flags.mesh), mu, 0.05 * flags.tolerance_scale);
        rep.check("semi_ellipticity", "fill area >= mu(region) * (1 - tolerance)",
                  res.pass,
                  "fill=" + rat_to_decimal(res.fill, 12) +
                      " target=" + rat_to_decimal(res.target, 12),
                  std::to_string(0.05 * flags.tolerance_scale),
                  "ratio=" + std::to_string(res.ratio));
      }
      return emit(rep, flags, t0);
    }

    // ---------------- verify ----------------
    if (verify->parsed()) {
      VerifyOptions vo{suite, flags.seed, flags.tolerance_scale, count};
      Report rep = run_verify(vo);
      return emit(rep, flags, t0);
    }
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
