#include "mfill/io.hpp"

#include <fstream>
#include <sstream>

#include "mfill/errors.hpp"

namespace mfill {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(BigInt(j.get<long long>()));
  if (j.is_number_float()) return rat_from_double(j.get<double>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    Rat p = rat_from_json(j[0]);
    Rat q = rat_from_json(j[1]);
    if (q == 0) throw ValidationError("zero denominator in rational pair");
    return p / q;
  }
  throw ValidationError("expected a number, got: " + j.dump());
}

Json rat_to_json(const Rat& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  // Exact decimal iff the denominator is of the form 2^a 5^b.
  BigInt d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d == 1 && den < BigInt("100000000000000000"))
    return Json(rat_to_decimal(q, 40));
  return Json::array({boost::multiprecision::numerator(q).str(), den.str()});
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file '" + path + "'");
  out << content;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PolygonalNorm polygon_from_json(const Json& j) {
  if (!j.contains("vertices")) throw ValidationError("polygon JSON needs 'vertices'");
  std::vector<Vec2> verts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2)
      throw ValidationError("polygon vertex must be [x, y]");
    verts.push_back(Vec2(rat_from_json(v[0]), rat_from_json(v[1])));
  }
  return PolygonalNorm(std::move(verts));
}

Json polygon_to_json(const std::vector<Vec2>& vertices) {
  Json verts = Json::array();
  for (const Vec2& v : vertices)
    verts.push_back(Json::array({rat_to_json(v.x), rat_to_json(v.y)}));
  Json out;
  out["vertices"] = std::move(verts);
  return out;
}

FiniteMetricSpace metric_from_json(const Json& j) {
  if (!j.contains("d")) throw ValidationError("metric JSON needs 'd'");
  std::vector<std::vector<Rat>> d;
  for (const auto& row : j.at("d")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    d.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) labels.push_back("p" + std::to_string(i));
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

FiniteMetricSpace metric_from_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  if (rows.size() < 2) throw ValidationError("metric CSV needs a header and rows");
  std::vector<std::string> labels(rows[0].begin(), rows[0].end());
  const std::size_t n = labels.size();
  if (rows.size() != n + 1) throw ValidationError("metric CSV row count mismatch");
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n) throw ValidationError("metric CSV column count mismatch");
    for (std::size_t k = 0; k < n; ++k) d[i][k] = rat_from_string(rows[i + 1][k]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

FiniteMetricSpace metric_from_file(const std::string& path) {
  std::string text = read_text_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return metric_from_csv(text);
  return metric_from_json(Json::parse(text));
}

Json metric_to_json(const FiniteMetricSpace& m) {
  Json out;
  out["labels"] = m.labels();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rat_to_json(m.distance(i, j)));
    rows.push_back(std::move(row));
  }
  out["d"] = std::move(rows);
  return out;
}

Graph graph_from_json(const Json& j) {
  std::vector<std::string> labels;
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) labels.push_back(v.get<std::string>());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  auto vertex_of = [&](const Json& v) -> std::size_t {
    if (v.is_number_integer()) {
      long long i = v.get<long long>();
      while (static_cast<long long>(labels.size()) <= i) {
        labels.push_back("v" + std::to_string(labels.size()));
      }
      return static_cast<std::size_t>(i);
    }
    std::string name = v.get<std::string>();
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (j.contains("vertices")) throw ValidationError("unknown vertex '" + name + "'");
    index[name] = labels.size();
    labels.push_back(name);
    return labels.size() - 1;
  };
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2) throw ValidationError("edge must be [u, v(, w)]");
    std::size_t u = vertex_of(e[0]);
    std::size_t v = vertex_of(e[1]);
    Rat w = e.size() >= 3 ? rat_from_json(e[2]) : Rat(1);
    edges.push_back({u, v, w});
  }
  return Graph(std::move(labels), std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.labels();
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(Json::array({g.labels()[e.u], g.labels()[e.v], rat_to_json(e.w)}));
  out["edges"] = std::move(edges);
  return out;
}

GroupPresentation presentation_from_json(const Json& j) {
  GroupPresentation p;
  for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
  if (j.contains("relators"))
    for (const auto& r : j.at("relators")) p.relators.push_back(r.get<std::string>());
  p.validate();
  return p;
}

SimplicialComplex2 complex_from_json(const Json& j) {
  std::size_t n = 0;
  std::vector<std::vector<Rat>> coords;
  if (j.contains("vertices") && j.at("vertices").is_array() &&
      !j.at("vertices").empty() && j.at("vertices")[0].is_array()) {
    for (const auto& v : j.at("vertices")) {
      std::vector<Rat> p;
      for (const auto& c : v) p.push_back(rat_from_json(c));
      coords.push_back(std::move(p));
    }
    n = coords.size();
  } else if (j.contains("vertex_count")) {
    n = j.at("vertex_count").get<std::size_t>();
  } else {
    throw ValidationError("complex JSON needs 'vertices' or 'vertex_count'");
  }
  std::vector<std::array<std::size_t, 3>> tris;
  for (const auto& t : j.at("triangles")) {
    if (!t.is_array() || t.size() != 3) throw ValidationError("triangle must be [i,j,k]");
    tris.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>()});
  }
  std::vector<Rat> weights;
  if (j.contains("weights"))
    for (const auto& w : j.at("weights")) weights.push_back(rat_from_json(w));
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      extra.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  SimplicialComplex2 k(n, std::move(tris), std::move(weights), std::move(extra));
  if (!coords.empty()) k.set_coords(std::move(coords));
  if (j.contains("metric")) {
    std::vector<std::vector<Rat>> metric;
    for (const auto& row : j.at("metric")) {
      std::vector<Rat> r;
      for (const auto& v : row) r.push_back(rat_from_json(v));
      metric.push_back(std::move(r));
    }
    k.set_vertex_metric(std::move(metric));
  }
  return k;
}

Json complex_to_json(const SimplicialComplex2& k) {
  Json out;
  if (k.has_coords()) {
    Json verts = Json::array();
    for (const auto& p : k.coords()) {
      Json row = Json::array();
      for (const auto& c : p) row.push_back(rat_to_json(c));
      verts.push_back(std::move(row));
    }
    out["vertices"] = std::move(verts);
  } else {
    out["vertex_count"] = k.vertex_count();
  }
  Json tris = Json::array();
  for (const auto& t : k.triangles()) tris.push_back(Json::array({t[0], t[1], t[2]}));
  out["triangles"] = std::move(tris);
  Json weights = Json::array();
  for (const Rat& w : k.weights()) weights.push_back(rat_to_json(w));
  out["weights"] = std::move(weights);
  if (k.has_vertex_metric()) {
    Json rows = Json::array();
    for (const auto& row : k.vertex_metric()) {
      Json r = Json::array();
      for (const Rat& v : row) r.push_back(rat_to_json(v));
      rows.push_back(std::move(r));
    }
    out["metric"] = std::move(rows);
  }
  return out;
}

Loop loop_from_json(const Json& j) {
  Loop loop;
  const Json& arr = j.is_array() ? j : j.at("loop");
  for (const auto& v : arr) loop.vertices.push_back(v.get<std::size_t>());
  return loop;
}

Chain chain_from_json(const Json& j) {
  Chain c;
  c.dim = j.value("dim", 1);
  if (c.dim != 1 && c.dim != 2) throw ValidationError("chain dim must be 1 or 2");
  for (const auto& [key, val] : j.at("coeffs").items())
    c.add(static_cast<std::size_t>(std::stoull(key)), rat_from_json(val));
  return c;
}

Json chain_to_json(const Chain& c) {
  Json out;
  out["dim"] = c.dim;
  Json coeffs = Json::object();
  for (const auto& [cell, v] : c.coeffs) coeffs[std::to_string(cell)] = rat_to_json(v);
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json enclosure_to_json(const Enclosure& e) {
  Json out;
  out["lo"] = rat_to_json(e.lo);
  out["hi"] = rat_to_json(e.hi);
  out["lo_decimal"] = rat_to_decimal(e.lo, 15);
  out["hi_decimal"] = rat_to_decimal(e.hi, 15);
  out["exact"] = e.exact;
  return out;
}

Json pi_scalar_to_json(const PiScalar& s) {
  Json out;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", s.to_double());
  out["decimal"] = std::string(buf);
  out["coeff"] = rat_to_json(s.coeff);
  out["pi_exponent"] = s.pi_exp;
  return out;
}

Json norm_invariants_to_json(const NormInvariantReport& rep) {
  Json out;
  out["self_perimeter"] = rat_to_json(rep.self_perimeter);
  out["self_perimeter_decimal"] = rat_to_decimal(rep.self_perimeter, 15);
  out["jung"] = enclosure_to_json(rep.jung);
  out["alpha_v"] = enclosure_to_json(rep.alpha_v);
  Json densities = Json::object();
  for (const auto& [mu, v] : rep.densities)
    densities[area_definition_name(mu)] = pi_scalar_to_json(v);
  out["densities"] = std::move(densities);
  Json ratios = Json::object();
  for (const auto& [mu, v] : rep.isoperimetric_ratio)
    ratios[area_definition_name(mu)] = pi_scalar_to_json(v);
  out["isoperimetric_ratio"] = std::move(ratios);
  out["isoperimetrix"] = polygon_to_json(rep.isoperimetrix_vertices);
  return out;
}

}  // namespace mfill
