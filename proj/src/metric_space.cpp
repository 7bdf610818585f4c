#include "mfill/metric_space.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mfill/errors.hpp"
#include "mfill/rng.hpp"

namespace mfill {

namespace {

/// Scales the matrix to int64 when a small common denominator exists;
/// the cubic and quartic scans below are an order of magnitude faster on
/// plain integers.
std::optional<std::vector<std::vector<std::int64_t>>> try_int64_matrix(
    const std::vector<std::vector<Rat>>& d) {
  BigInt lcm = 1;
  const BigInt cap = 1 << 20;
  for (const auto& row : d)
    for (const Rat& v : row) {
      BigInt den = boost::multiprecision::denominator(v);
      lcm = boost::multiprecision::lcm(lcm, den);
      if (lcm > cap) return std::nullopt;
    }
  const BigInt limit = BigInt(1) << 60;
  std::vector<std::vector<std::int64_t>> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out[i].reserve(d[i].size());
    for (const Rat& v : d[i]) {
      BigInt scaled = boost::multiprecision::numerator(v) *
                      (lcm / boost::multiprecision::denominator(v));
      if (scaled > limit || scaled < -limit) return std::nullopt;
      out[i].push_back(scaled.template convert_to<std::int64_t>());
    }
  }
  return out;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Rat>> d)
    : labels_(std::move(labels)), d_(std::move(d)) {
  validate();
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Rat>> d, Trusted)
    : labels_(std::move(labels)), d_(std::move(d)) {}

void FiniteMetricSpace::validate() const {
  const std::size_t n = labels_.size();
  if (d_.size() != n) throw ValidationError("distance matrix size mismatch");
  for (const auto& row : d_)
    if (row.size() != n) throw ValidationError("distance matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i][i] != 0) throw ValidationError("nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d_[i][j] != d_[j][i]) throw ValidationError("asymmetric distance matrix");
      if (d_[i][j] <= 0)
        throw ValidationError("distance between distinct points must be positive");
    }
  }

  // Triangle inequality, with an int64 fast path when the entries share a
  // small common denominator.
  if (auto m = try_int64_matrix(d_)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if ((*m)[i][k] > (*m)[i][j] + (*m)[j][k])
            throw ValidationError("triangle inequality violated");
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (d_[i][k] > d_[i][j] + d_[j][k])
            throw ValidationError("triangle inequality violated");
  }
}

Rat FiniteMetricSpace::diameter() const {
  Rat best = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) best = std::max(best, d_[i][j]);
  return best;
}

std::size_t FiniteMetricSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ValidationError("unknown point label '" + label + "'");
}

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ValidationError("empty graph");
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("self-loop not allowed");
    if (e.w <= 0) throw ValidationError("edge weight must be positive");
    adj_[e.u].push_back({e.v, e.w});
    adj_[e.v].push_back({e.u, e.w});
  }
  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack = {0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  if (count != n) throw ValidationError("graph is not connected");
}

std::vector<Rat> Graph::dijkstra(std::size_t source) const {
  return multi_source_distances({source});
}

std::vector<Rat> Graph::multi_source_distances(const std::vector<std::size_t>& sources) const {
  const std::size_t n = size();
  std::vector<Rat> dist(n);
  std::vector<char> done(n, 0), reached(n, 0);
  using Item = std::pair<Rat, std::size_t>;
  auto cmp = [](const Item& a, const Item& b) {
    return a.first > b.first || (a.first == b.first && a.second > b.second);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
  for (std::size_t s : sources) {
    dist[s] = 0;
    reached[s] = 1;
    pq.push({Rat(0), s});
  }
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& [v, w] : adj_[u]) {
      Rat nd = du + w;
      if (!reached[v] || nd < dist[v]) {
        reached[v] = 1;
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!done[v]) throw ValidationError("graph is not connected");
  return dist;
}

std::vector<std::size_t> Graph::shortest_path(std::size_t a, std::size_t b) const {
  const std::size_t n = size();
  std::vector<Rat> dist(n);
  std::vector<char> done(n, 0), reached(n, 0);
  std::vector<std::size_t> pred(n, n);
  using Item = std::pair<Rat, std::size_t>;
  auto cmp = [](const Item& x, const Item& y) {
    return x.first > y.first || (x.first == y.first && x.second > y.second);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
  dist[a] = 0;
  reached[a] = 1;
  pq.push({Rat(0), a});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& [v, w] : adj_[u]) {
      if (done[v]) continue;
      Rat nd = du + w;
      if (!reached[v] || nd < dist[v] || (nd == dist[v] && u < pred[v])) {
        reached[v] = 1;
        dist[v] = nd;
        pred[v] = u;
        pq.push({nd, v});
      }
    }
  }
  if (!done[b]) throw ValidationError("graph is not connected");
  std::vector<std::size_t> path;
  for (std::size_t cur = b; cur != a; cur = pred[cur]) path.push_back(cur);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

FiniteMetricSpace graph_metric(const Graph& g) {
  std::vector<std::vector<Rat>> d;
  d.reserve(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) d.push_back(g.dijkstra(s));
  return FiniteMetricSpace(g.labels(), std::move(d), FiniteMetricSpace::Trusted{});
}

namespace {

template <typename T>
T four_point_delta_impl(const std::vector<std::vector<T>>& d) {
  const std::size_t n = d.size();
  T best = 0;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = w + 1; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          T s1 = d[w][x] + d[y][z];
          T s2 = d[w][y] + d[x][z];
          T s3 = d[w][z] + d[x][y];
          T l1 = std::max(s1, std::max(s2, s3));
          T l3 = std::min(s1, std::min(s2, s3));
          T l2 = s1 + s2 + s3 - l1 - l3;
          T defect = l1 - l2;
          if (defect > best) best = defect;
        }
  return best;
}

}  // namespace

Rat four_point_delta(const FiniteMetricSpace& m) {
  if (auto d = try_int64_matrix(m.matrix())) {
    // Undo the common-denominator scaling afterwards.
    Rat scale = m.size() > 1 && (*d)[0][1] != 0 ? m.distance(0, 1) / (*d)[0][1] : Rat(1);
    return Rat(four_point_delta_impl(*d)) * scale / 4;
  }
  return four_point_delta_impl(m.matrix()) / 4;
}

Rat slim_triangle_delta(const Graph& g, std::size_t sample_budget) {
  const std::size_t n = g.size();
  if (n < 3) return 0;

  // Shortest-path predecessor tree per source (deterministic tie-breaks),
  // so triple sides are O(path length) lookups.
  std::vector<std::vector<std::size_t>> pred(n);
  {
    using Item = std::pair<Rat, std::size_t>;
    auto cmp = [](const Item& x, const Item& y) {
      return x.first > y.first || (x.first == y.first && x.second > y.second);
    };
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Rat> dist(n);
      std::vector<char> done(n, 0), reached(n, 0);
      pred[s].assign(n, n);
      std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
      dist[s] = 0;
      reached[s] = 1;
      pq.push({Rat(0), s});
      while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (const auto& [v, w] : g.adjacency()[u]) {
          if (done[v]) continue;
          Rat nd = du + w;
          if (!reached[v] || nd < dist[v] || (nd == dist[v] && u < pred[s][v])) {
            reached[v] = 1;
            dist[v] = nd;
            pred[s][v] = u;
            pq.push({nd, v});
          }
        }
      }
    }
  }
  FiniteMetricSpace metric = graph_metric(g);
  auto path_between = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> path;
    for (std::size_t cur = b; cur != a; cur = pred[a][cur]) path.push_back(cur);
    path.push_back(a);
    return path;
  };

  std::vector<std::array<std::size_t, 3>> triples;
  const std::size_t total = n * (n - 1) * (n - 2) / 6;
  if (total <= sample_budget) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  } else {
    // Deterministic sample plus structured seeds: vertices of extreme
    // eccentricity tend to span the fattest triangles.
    std::vector<Rat> ecc0 = g.dijkstra(0);
    std::size_t far1 = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (ecc0[v] > ecc0[far1]) far1 = v;
    std::vector<Rat> ecc1 = g.dijkstra(far1);
    std::size_t far2 = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (ecc1[v] > ecc1[far2]) far2 = v;
    std::vector<Rat> ecc2 = g.dijkstra(far2);
    std::size_t far3 = 0;
    Rat best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      Rat score = std::min(ecc1[v], ecc2[v]);
      if (score > best) {
        best = score;
        far3 = v;
      }
    }
    std::vector<std::size_t> hubs = {0, far1, far2, far3};
    std::sort(hubs.begin(), hubs.end());
    hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
    for (std::size_t i = 0; i < hubs.size(); ++i)
      for (std::size_t j = i + 1; j < hubs.size(); ++j)
        for (std::size_t k = j + 1; k < hubs.size(); ++k)
          triples.push_back({hubs[i], hubs[j], hubs[k]});
    Rng rng(0x51e9u + n);
    while (triples.size() < sample_budget) {
      std::size_t a = rng.next_below(n), b = rng.next_below(n), c = rng.next_below(n);
      if (a == b || b == c || a == c) continue;
      triples.push_back({a, b, c});
    }
  }

  auto int_matrix = try_int64_matrix(metric.matrix());
  Rat scale(1);
  if (int_matrix && n > 1 && (*int_matrix)[0][1] != 0)
    scale = metric.distance(0, 1) / (*int_matrix)[0][1];

  Rat best = 0;
  std::int64_t best_int = 0;
  std::vector<std::size_t> sides[3];
  for (const auto& t : triples) {
    sides[0] = path_between(t[0], t[1]);
    sides[1] = path_between(t[1], t[2]);
    sides[2] = path_between(t[2], t[0]);
    for (int s = 0; s < 3; ++s) {
      const auto& a = sides[(s + 1) % 3];
      const auto& b = sides[(s + 2) % 3];
      if (int_matrix) {
        const auto& d = *int_matrix;
        for (std::size_t p : sides[s]) {
          std::int64_t nearest = -1;
          for (std::size_t q : a)
            if (nearest < 0 || d[p][q] < nearest) nearest = d[p][q];
          for (std::size_t q : b)
            if (d[p][q] < nearest) nearest = d[p][q];
          if (nearest > best_int) best_int = nearest;
        }
      } else {
        for (std::size_t p : sides[s]) {
          Rat nearest(-1);
          for (std::size_t q : a)
            if (nearest < 0 || metric.distance(p, q) < nearest)
              nearest = metric.distance(p, q);
          for (std::size_t q : b)
            if (metric.distance(p, q) < nearest) nearest = metric.distance(p, q);
          if (nearest > best) best = nearest;
        }
      }
    }
  }
  if (int_matrix) return Rat(best_int) * scale;
  return best;
}

Rat EmbeddedPointSet::sup_distance(std::size_t i, std::size_t j) const {
  Rat best = 0;
  for (std::size_t k = 0; k < coords[i].size(); ++k)
    best = std::max(best, rat_abs(coords[i][k] - coords[j][k]));
  return best;
}

EmbeddedPointSet kuratowski_embed(const FiniteMetricSpace& m, const std::string& basepoint) {
  const std::size_t z0 = m.index_of(basepoint);
  EmbeddedPointSet out;
  out.labels = m.labels();
  out.coords.assign(m.size(), std::vector<Rat>(m.size()));
  for (std::size_t z = 0; z < m.size(); ++z)
    for (std::size_t j = 0; j < m.size(); ++j)
      out.coords[z][j] = m.distance(z, j) - m.distance(z0, j);
  return out;
}

std::vector<std::size_t> separated_net(const FiniteMetricSpace& m, const Rat& delta) {
  if (delta <= 0) throw ValidationError("net separation must be positive");
  std::vector<std::size_t> net;
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool ok = true;
    for (std::size_t z : net)
      if (m.distance(i, z) < delta) {
        ok = false;
        break;
      }
    if (ok) net.push_back(i);
  }
  return net;
}

}  // namespace mfill
