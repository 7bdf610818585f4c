#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfill/cayley.hpp"
#include "mfill/fixtures.hpp"
#include "mfill/hlambda.hpp"
#include "mfill/io.hpp"
#include "mfill/jung.hpp"
#include "mfill/profile.hpp"
#include "mfill/rips.hpp"
#include "mfill/tight_span.hpp"
#include "mfill/verify.hpp"

namespace py = pybind11;
using namespace mfill;

namespace {

PolygonalNorm norm_from_vertices(const std::vector<std::pair<std::string, std::string>>& verts) {
  std::vector<Vec2> v;
  for (const auto& [x, y] : verts) v.push_back(Vec2(rat_from_string(x), rat_from_string(y)));
  return PolygonalNorm(std::move(v));
}

FiniteMetricSpace metric_from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<Rat>> d;
  for (const auto& row : rows) {
    std::vector<Rat> r;
    for (double v : row) r.push_back(rat_from_double(v));
    d.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d.size(); ++i) labels.push_back("p" + std::to_string(i));
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

Graph graph_from_edges(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Graph::Edge> es;
  for (const auto& [u, v, w] : edges) es.push_back({u, v, rat_from_double(w)});
  return Graph(std::move(labels), std::move(es));
}

SimplicialComplex2 complex_from_parts(std::size_t n,
                                      const std::vector<std::array<std::size_t, 3>>& tris,
                                      const std::vector<double>& weights) {
  std::vector<Rat> w;
  for (double x : weights) w.push_back(rat_from_double(x));
  return SimplicialComplex2(n, tris, std::move(w));
}

}  // namespace

PYBIND11_MODULE(_mfill, m) {
  m.doc() = "Polygonal Minkowski geometry, hyperbolicity diagnostics and discrete "
            "filling problems (C++ core bindings)";

  // ---- normed plane -------------------------------------------------
  m.def("gauge", [](const std::vector<std::pair<std::string, std::string>>& ball,
                    const std::string& x, const std::string& y) {
    PolygonalNorm n = norm_from_vertices(ball);
    return rat_to_decimal(n.gauge(Vec2(rat_from_string(x), rat_from_string(y))), 17);
  }, "Minkowski functional of the polygonal ball (exact decimal string)");

  m.def("self_perimeter", [](const std::vector<std::pair<std::string, std::string>>& ball) {
    return rat_to_decimal(norm_from_vertices(ball).self_perimeter(), 17);
  });

  m.def("polar_dual", [](const std::vector<std::pair<std::string, std::string>>& ball) {
    PolygonalNorm dual = norm_from_vertices(ball).polar_dual();
    std::vector<std::pair<std::string, std::string>> out;
    for (const Vec2& v : dual.vertices())
      out.push_back({rat_to_decimal(v.x, 17), rat_to_decimal(v.y, 17)});
    return out;
  });

  m.def("area_density", [](const std::vector<std::pair<std::string, std::string>>& ball,
                           const std::string& mu) {
    return norm_from_vertices(ball).area_density(area_definition_from_string(mu)).to_double();
  });

  m.def("isoperimetric_ratio", [](const std::vector<std::pair<std::string, std::string>>& ball,
                                  const std::string& mu) {
    return norm_from_vertices(ball)
        .isoperimetric_ratio(area_definition_from_string(mu))
        .to_double();
  });

  m.def("jung_constant", [](const std::vector<std::pair<std::string, std::string>>& ball,
                            double resolution) {
    JungResult r = jung_constant(norm_from_vertices(ball), resolution);
    return std::make_pair(rat_to_double(r.enclosure.lo), rat_to_double(r.enclosure.hi));
  }, py::arg("ball"), py::arg("resolution") = 0.01);

  m.def("alpha_v", [](const std::vector<std::pair<std::string, std::string>>& ball,
                      double resolution) {
    Enclosure a = alpha_v(norm_from_vertices(ball), resolution);
    return std::make_pair(rat_to_double(a.lo), rat_to_double(a.hi));
  }, py::arg("ball"), py::arg("resolution") = 0.01);

  m.def("square_ball", [] {
    PolygonalNorm norm = square_norm();
    std::vector<std::pair<std::string, std::string>> out;
    for (const Vec2& v : norm.vertices())
      out.push_back({rat_to_decimal(v.x, 17), rat_to_decimal(v.y, 17)});
    return out;
  });

  m.def("hexagon_ball", [] {
    PolygonalNorm norm = hexagon_norm();
    std::vector<std::pair<std::string, std::string>> out;
    for (const Vec2& v : norm.vertices())
      out.push_back({rat_to_decimal(v.x, 17), rat_to_decimal(v.y, 17)});
    return out;
  });

  // ---- finite metric spaces -----------------------------------------
  m.def("four_point_delta", [](const std::vector<std::vector<double>>& d) {
    return rat_to_double(four_point_delta(metric_from_rows(d)));
  });

  m.def("graph_four_point_delta",
        [](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
          return rat_to_double(four_point_delta(graph_metric(graph_from_edges(n, edges))));
        });

  m.def("slim_triangle_delta",
        [](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges,
           std::size_t budget) {
          return rat_to_double(slim_triangle_delta(graph_from_edges(n, edges), budget));
        },
        py::arg("n"), py::arg("edges"), py::arg("budget") = 20000);

  m.def("kuratowski_embed", [](const std::vector<std::vector<double>>& d) {
    FiniteMetricSpace m2 = metric_from_rows(d);
    EmbeddedPointSet emb = kuratowski_embed(m2, m2.labels()[0]);
    std::vector<std::vector<double>> coords;
    for (const auto& row : emb.coords) {
      std::vector<double> r;
      for (const Rat& v : row) r.push_back(rat_to_double(v));
      coords.push_back(std::move(r));
    }
    return coords;
  });

  m.def("cayley_ball_size", [](const std::vector<std::string>& generators,
                               const std::vector<std::string>& relators, int radius) {
    GroupPresentation p{generators, relators};
    return cayley_ball(p, radius).size();
  });

  // ---- filling -------------------------------------------------------
  m.def("min_filling_area",
        [](std::size_t n, const std::vector<std::array<std::size_t, 3>>& tris,
           const std::vector<double>& weights, const std::vector<std::size_t>& loop,
           bool integral) {
          SimplicialComplex2 k = complex_from_parts(n, tris, weights);
          Loop l;
          l.vertices = loop;
          FillResult res = min_filling_area(
              k, k.loop_chain(l), integral ? FillMode::integral : FillMode::relaxed);
          return rat_to_double(res.area);
        },
        py::arg("n"), py::arg("triangles"), py::arg("weights"), py::arg("loop"),
        py::arg("integral") = false);

  m.def("octahedron_equator_fill", [] {
    SimplicialComplex2 oct = octahedron();
    Loop equator;
    equator.vertices = {0, 1, 2, 3};
    return rat_to_double(min_filling_area(oct, oct.loop_chain(equator),
                                          FillMode::relaxed).area);
  });

  m.def("rips_filling_radius", [](const std::vector<std::vector<double>>& d,
                                  const std::vector<std::size_t>& loop) {
    Loop l;
    l.vertices = loop;
    return rat_to_double(rips_filling_radius(metric_from_rows(d), l));
  });

  m.def("h_lambda_estimate",
        [](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges,
           const std::vector<std::size_t>& loop, double lambda, double r, int rounds) {
          Loop l;
          l.vertices = loop;
          return h_lambda_estimate(graph_from_edges(n, edges), l, lambda, r, rounds).value;
        },
        py::arg("n"), py::arg("edges"), py::arg("loop"), py::arg("lambda_"), py::arg("r"),
        py::arg("rounds") = 4);

  m.def("verify", [](const std::string& suite, std::uint64_t seed, double scale) {
    VerifyOptions opts{suite, seed, scale, 200};
    Report rep = run_verify(opts);
    return std::make_pair(rep.all_passed(), rep.to_json().dump(2));
  }, py::arg("suite") = "constants", py::arg("seed") = 7, py::arg("scale") = 1.0);

  m.attr("__version__") = toolkit_version();
}
