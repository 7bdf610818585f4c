#include "mfill/fixtures.hpp"

#include <cmath>

#include "mfill/errors.hpp"
#include "mfill/rng.hpp"

namespace mfill {

PolygonalNorm square_norm() {
  return PolygonalNorm({Vec2(Rat(1), Rat(1)), Vec2(Rat(-1), Rat(1)),
                        Vec2(Rat(-1), Rat(-1)), Vec2(Rat(1), Rat(-1))});
}

PolygonalNorm hexagon_norm() {
  return PolygonalNorm({Vec2(Rat(1), Rat(0)), Vec2(Rat(0), Rat(1)), Vec2(Rat(-1), Rat(1)),
                        Vec2(Rat(-1), Rat(0)), Vec2(Rat(0), Rat(-1)), Vec2(Rat(1), Rat(-1))});
}

namespace {

Rat round_to(double x, long long den) {
  return Rat(BigInt(static_cast<long long>(std::llround(x * static_cast<double>(den)))),
             BigInt(den));
}

}  // namespace

PolygonalNorm euclidean_ngon(int half_count) {
  if (half_count < 2) throw ValidationError("need at least 4 vertices");
  std::vector<Vec2> verts;
  for (int k = 0; k < half_count; ++k) {
    double th = M_PI * k / half_count;
    verts.push_back(Vec2(round_to(std::cos(th), 1000000000LL),
                         round_to(std::sin(th), 1000000000LL)));
  }
  for (int k = 0; k < half_count; ++k)
    verts.push_back(-verts[static_cast<std::size_t>(k)]);
  return PolygonalNorm(std::move(verts));
}

FiniteMetricSpace circle_chord_metric(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double chord = 2.0 * std::sin(M_PI * static_cast<double>(j - i) / static_cast<double>(n));
      d[i][j] = d[j][i] = round_to(chord, 1000000000LL);
    }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

Loop full_cycle_loop(std::size_t n) {
  Loop loop;
  for (std::size_t i = 0; i < n; ++i) loop.vertices.push_back(i);
  return loop;
}

Graph grid_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back(std::to_string(i) + "," + std::to_string(j));
  std::vector<Graph::Edge> edges;
  auto at = [&](std::size_t i, std::size_t j) { return j * n + i; };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n) edges.push_back({at(i, j), at(i + 1, j), Rat(1)});
      if (j + 1 < n) edges.push_back({at(i, j), at(i, j + 1), Rat(1)});
    }
  return Graph(std::move(labels), std::move(edges));
}

Loop grid_boundary_loop(std::size_t n) {
  if (n < 2) throw ValidationError("grid too small");
  Loop loop;
  auto at = [&](std::size_t i, std::size_t j) { return j * n + i; };
  for (std::size_t i = 0; i + 1 < n; ++i) loop.vertices.push_back(at(i, 0));
  for (std::size_t j = 0; j + 1 < n; ++j) loop.vertices.push_back(at(n - 1, j));
  for (std::size_t i = n - 1; i > 0; --i) loop.vertices.push_back(at(i, n - 1));
  for (std::size_t j = n - 1; j > 0; --j) loop.vertices.push_back(at(0, j));
  return loop;
}

Graph binary_tree_graph(int depth) {
  if (depth < 1) throw ValidationError("depth must be >= 1");
  std::size_t n = (1u << (depth + 1)) - 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; 2 * i + 2 < n; ++i) {
    edges.push_back({i, 2 * i + 1, Rat(1)});
    edges.push_back({i, 2 * i + 2, Rat(1)});
  }
  return Graph(std::move(labels), std::move(edges));
}

Loop tree_out_and_back_loop(int depth) {
  Loop loop;
  std::vector<std::size_t> down;
  std::size_t v = 0;
  down.push_back(v);
  for (int d = 0; d < depth; ++d) {
    v = 2 * v + 1;
    down.push_back(v);
  }
  loop.vertices = down;
  for (std::size_t i = down.size() - 1; i > 1; --i) loop.vertices.push_back(down[i - 1]);
  return loop;
}

Graph path_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Rat(1)});
  return Graph(std::move(labels), std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Rat(1)});
  return Graph(std::move(labels), std::move(edges));
}

FiniteMetricSpace random_metric(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1, Rat(rng.next_int(1, 9), 2)});
  for (std::size_t extra = 0; extra < n; ++extra) {
    std::size_t a = rng.next_below(n), b = rng.next_below(n);
    if (a == b) continue;
    edges.push_back({std::min(a, b), std::max(a, b), Rat(rng.next_int(1, 9), 2)});
  }
  Graph g(std::move(labels), std::move(edges));
  return graph_metric(g);
}

long octagon_regular_cut(long a, long parity) {
  // Most circle-like cut: k ~ 2a/(2+sqrt(2)), adjusted to the parity of
  // 2a - k == parity (mod 2), i.e. k == parity (mod 2).
  double ideal = 2.0 * static_cast<double>(a) / (2.0 + std::sqrt(2.0));
  long k = std::lround(ideal);
  if (((2 * a - k) - parity) % 2 != 0) {
    long up = k + 1, dn = k - 1;
    k = std::fabs(up - ideal) <= std::fabs(dn - ideal) ? up : dn;
  }
  if (k < 1) k = (((2 * a - 1) - parity) % 2 + 2) % 2 == 0 ? 1 : 2;
  return k;
}

Loop octagon_loop(const PlanePatch& patch, long ci, long cj, long a, long k) {
  if (a < 2 || k < 1 || k >= a)
    throw ValidationError("octagon needs 1 <= k < a, a >= 2");
  if ((((2 * a - k) - (ci + cj)) % 2 + 2) % 2 != 0)
    throw ValidationError("octagon diagonal parity mismatch with the lattice");
  long b = a - k;  // half length of the straight sides
  Loop loop;
  auto push = [&](long i, long j) {
    if (i < 0 || j < 0 || i > patch.cells_per_side || j > patch.cells_per_side)
      throw ValidationError("octagon leaves the patch");
    loop.vertices.push_back(patch.vertex_at(i, j));
  };
  // Start at the bottom of the east side, walk counterclockwise.
  for (long j = -b; j < b; ++j) push(ci + a, cj + j);            // east, north-bound
  for (long s = 0; s < k; ++s) push(ci + a - s, cj + b + s);     // NE cut
  for (long i = b; i > -b; --i) push(ci + i, cj + a);            // north, west-bound
  for (long s = 0; s < k; ++s) push(ci - b - s, cj + a - s);     // NW cut
  for (long j = b; j > -b; --j) push(ci - a, cj + j);            // west, south-bound
  for (long s = 0; s < k; ++s) push(ci - a + s, cj - b - s);     // SW cut
  for (long i = -b; i < b; ++i) push(ci + i, cj - a);            // south, east-bound
  for (long s = 0; s < k; ++s) push(ci + b + s, cj - a + s);     // SE cut
  return loop;
}

}  // namespace mfill
