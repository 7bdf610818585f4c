#include "mfill/substrates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mfill/errors.hpp"
#include "mfill/metric_space.hpp"

namespace mfill {

PlanePatch plane_patch(const Rat& extent, const Rat& mesh, const Rat& weight_density,
                       std::size_t triangle_cap) {
  triangle_cap = env_size_cap(triangle_cap);
  if (extent <= 0 || mesh <= 0) throw ValidationError("extent and mesh must be positive");
  Rat cells_r = extent / mesh;
  if (boost::multiprecision::denominator(cells_r) != 1)
    throw ValidationError("extent must be an integer multiple of mesh");
  long m = cells_r.template convert_to<long>();
  if (static_cast<std::size_t>(2 * m * m) > triangle_cap)
    throw CapError("plane patch would have " + std::to_string(2 * m * m) +
                   " triangles, cap " + std::to_string(triangle_cap));

  std::vector<std::array<std::size_t, 3>> tris;
  tris.reserve(static_cast<std::size_t>(2 * m * m));
  auto v = [&](long i, long j) { return static_cast<std::size_t>(j * (m + 1) + i); };
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < m; ++i) {
      if ((i + j) % 2 == 0) {
        tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
        tris.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
      } else {
        tris.push_back({v(i, j), v(i + 1, j), v(i, j + 1)});
        tris.push_back({v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)});
      }
    }
  Rat w = mesh * mesh / 2 * weight_density;
  std::vector<Rat> weights(tris.size(), w);
  PlanePatch patch{SimplicialComplex2(static_cast<std::size_t>((m + 1) * (m + 1)),
                                      std::move(tris), std::move(weights)),
                   mesh, m};
  std::vector<std::vector<Rat>> coords;
  coords.reserve(static_cast<std::size_t>((m + 1) * (m + 1)));
  for (long j = 0; j <= m; ++j)
    for (long i = 0; i <= m; ++i) coords.push_back({mesh * i, mesh * j});
  patch.complex.set_coords(std::move(coords));
  return patch;
}

PlanePatch plane_patch_normed(const PolygonalNorm& norm, AreaDefinition mu,
                              const Rat& extent, const Rat& mesh, int& pi_exp_out,
                              std::size_t triangle_cap) {
  PiScalar density = norm.area_density(mu);
  pi_exp_out = density.pi_exp;
  return plane_patch(extent, mesh, density.coeff, triangle_cap);
}

HyperbolicBall hyperbolic_ball(int layers, std::size_t triangle_cap) {
  if (layers < 1) throw ValidationError("need at least one layer");
  std::vector<std::array<std::size_t, 3>> tris;
  std::map<std::pair<std::size_t, std::size_t>, char> edge_seen;
  std::vector<std::size_t> degree;

  auto add_vertex = [&]() {
    degree.push_back(0);
    return degree.size() - 1;
  };
  auto note_edge = [&](std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    if (edge_seen.emplace(std::make_pair(key.first, key.second), 1).second) {
      degree[a]++;
      degree[b]++;
    }
  };
  auto add_triangle = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (tris.size() >= triangle_cap) throw CapError("hyperbolic ball triangle cap");
    tris.push_back({a, b, c});
    note_edge(a, b);
    note_edge(b, c);
    note_edge(c, a);
  };

  std::size_t center = add_vertex();
  std::vector<std::size_t> ring;
  for (int i = 0; i < 7; ++i) ring.push_back(add_vertex());
  for (int i = 0; i < 7; ++i)
    add_triangle(center, ring[static_cast<std::size_t>(i)],
                 ring[static_cast<std::size_t>((i + 1) % 7)]);

  HyperbolicBall ball{SimplicialComplex2(0, {}), {}};
  std::vector<std::vector<std::size_t>> rings = {ring};

  for (int layer = 2; layer <= layers; ++layer) {
    const std::vector<std::size_t>& cur = rings.back();
    const std::size_t len = cur.size();
    // Apex vertex per ring edge, fan vertices per ring vertex.
    std::vector<std::size_t> apex(len);
    for (std::size_t i = 0; i < len; ++i) apex[i] = add_vertex();
    std::vector<std::vector<std::size_t>> fans(len);
    for (std::size_t i = 0; i < len; ++i) {
      // After its ring was built, cur[i] already has ring and lower edges;
      // it needs 7 in total: two apexes plus 5 - degree fan interiors.
      std::size_t need = 7 - degree[cur[i]];
      if (need < 2) throw Error("hyperbolic layer bookkeeping broke (internal)");
      std::size_t interior = need - 2;
      for (std::size_t k = 0; k < interior; ++k) fans[i].push_back(add_vertex());
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t vcur = cur[i];
      std::size_t vnext = cur[(i + 1) % len];
      // Edge triangle over (vcur, vnext) with the shared apex.
      add_triangle(vcur, vnext, apex[i]);
      // Fan around vnext from apex[i] through its interiors to apex[i+1].
      std::vector<std::size_t> arc = {apex[i]};
      for (std::size_t w : fans[(i + 1) % len]) arc.push_back(w);
      arc.push_back(apex[(i + 1) % len]);
      for (std::size_t k = 0; k + 1 < arc.size(); ++k)
        add_triangle(vnext, arc[k], arc[k + 1]);
      next.push_back(apex[i]);
      for (std::size_t w : fans[(i + 1) % len]) next.push_back(w);
    }
    rings.push_back(std::move(next));
  }

  ball.complex = SimplicialComplex2(degree.size(), std::move(tris));
  ball.rings = std::move(rings);
  return ball;
}

SimplicialComplex2 octahedron() {
  std::vector<std::array<std::size_t, 3>> tris = {
      {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4},
      {1, 0, 5}, {2, 1, 5}, {3, 2, 5}, {0, 3, 5}};
  SimplicialComplex2 k(6, std::move(tris));
  std::vector<std::vector<Rat>> coords = {{1, 0, 0},  {0, 1, 0},  {-1, 0, 0},
                                          {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  k.set_coords(std::move(coords));
  std::vector<Graph::Edge> edges;
  for (const auto& [u, v] : k.edges()) edges.push_back({u, v, Rat(1)});
  std::vector<std::string> labels;
  for (int i = 0; i < 6; ++i) labels.push_back(std::to_string(i));
  Graph g(std::move(labels), std::move(edges));
  k.set_vertex_metric(graph_metric(g).matrix());
  return k;
}

SimplicialComplex2 cylinder_complex(std::size_t n, const Rat& height, bool capped) {
  if (n < 3) throw ValidationError("cylinder needs at least 3 rim vertices");
  if (height <= 0) throw ValidationError("cylinder height must be positive");
  std::vector<std::array<std::size_t, 3>> tris;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    tris.push_back({i, j, n + i});
    tris.push_back({j, n + j, n + i});
  }
  if (capped)
    for (std::size_t k = 1; k + 1 < n; ++k) tris.push_back({n, n + k, n + k + 1});
  SimplicialComplex2 k(2 * n, std::move(tris));

  std::vector<Graph::Edge> edges;
  Rat diag = height + Rat(1, 2);
  for (const auto& [u, v] : k.edges()) {
    bool u_top = u >= n, v_top = v >= n;
    Rat w;
    if (u_top == v_top)
      w = 1;  // rim edge (including cap chords: combinatorial length 1)
    else if (v == u + n || u == v + n)
      w = height;  // vertical
    else
      w = diag;
    edges.push_back({u, v, w});
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 2 * n; ++i) labels.push_back(std::to_string(i));
  Graph g(std::move(labels), std::move(edges));
  k.set_vertex_metric(graph_metric(g).matrix());
  return k;
}

std::vector<std::size_t> disk_region(const PlanePatch& patch, double cx, double cy,
                                     double radius) {
  std::vector<std::size_t> region;
  const auto& k = patch.complex;
  for (std::size_t t = 0; t < k.triangles().size(); ++t) {
    const auto& tri = k.triangles()[t];
    double x = 0, y = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      x += rat_to_double(k.coords()[tri[c]][0]);
      y += rat_to_double(k.coords()[tri[c]][1]);
    }
    x /= 3;
    y /= 3;
    double dx = x - cx, dy = y - cy;
    if (dx * dx + dy * dy <= radius * radius) region.push_back(t);
  }
  return region;
}

std::vector<Loop> region_boundary_loops(const SimplicialComplex2& k,
                                        const std::vector<std::size_t>& region) {
  Chain c2;
  c2.dim = 2;
  for (std::size_t t : region) c2.add(t, Rat(1));
  Chain b = k.boundary(c2);

  // Directed arcs of the boundary; coefficients must be +-1.
  std::map<std::size_t, std::vector<std::size_t>> succ;
  std::size_t arc_count = 0;
  for (const auto& [e, coeff] : b.coeffs) {
    const auto& [u, v] = k.edges()[e];
    if (coeff == 1)
      succ[u].push_back(v);
    else if (coeff == -1)
      succ[v].push_back(u);
    else
      throw ValidationError("region boundary has a multiple edge");
    ++arc_count;
  }
  for (auto& [u, outs] : succ) std::sort(outs.begin(), outs.end());

  std::vector<Loop> loops;
  std::size_t used = 0;
  while (used < arc_count) {
    std::size_t start = succ.begin()->first;
    for (const auto& [u, outs] : succ)
      if (!outs.empty()) {
        start = u;
        break;
      }
    Loop loop;
    std::size_t cur = start;
    while (true) {
      auto it = succ.find(cur);
      if (it == succ.end() || it->second.empty())
        throw ValidationError("region boundary is not a union of cycles");
      std::size_t nxt = it->second.front();
      it->second.erase(it->second.begin());
      ++used;
      loop.vertices.push_back(cur);
      cur = nxt;
      if (cur == start) break;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

Loop circle_loop(const PlanePatch& patch, double cx, double cy, double radius) {
  std::vector<std::size_t> region = disk_region(patch, cx, cy, radius);
  if (region.empty()) throw ValidationError("disk region is empty");
  std::vector<Loop> loops = region_boundary_loops(patch.complex, region);
  if (loops.size() != 1)
    throw ValidationError("digitized circle split into " + std::to_string(loops.size()) +
                          " cycles; adjust radius or mesh");
  return loops.front();
}

}  // namespace mfill
