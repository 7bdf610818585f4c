#include "mfill/hlambda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "mfill/errors.hpp"

namespace mfill {

namespace {

struct EdgeChain {
  // Canonically oriented edge (u < v) with accumulated coefficient.
  std::size_t u, v;
  double coeff;
  double w;
};

std::vector<EdgeChain> loop_edge_chain(const Graph& g, const Loop& loop) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> acc;
  const std::size_t n = loop.vertices.size();
  if (n < 2) throw ValidationError("loop needs at least 2 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = loop.vertices[i];
    std::size_t b = loop.vertices[(i + 1) % n];
    const Rat* w = nullptr;
    for (const auto& [nb, ww] : g.adjacency()[a])
      if (nb == b) {
        w = &ww;
        break;
      }
    if (!w) throw ValidationError("loop uses a non-edge");
    auto key = std::minmax(a, b);
    double sign = a < b ? 1.0 : -1.0;
    auto& slot = acc[{key.first, key.second}];
    slot.first += sign;
    slot.second = rat_to_double(*w);
  }
  std::vector<EdgeChain> out;
  for (const auto& [key, val] : acc)
    if (val.first != 0) out.push_back({key.first, key.second, val.first, val.second});
  return out;
}

/// Kantorovich step: maximize sum coef_v phi_v over |phi_u - phi_v| <= L w_uv.
/// Solved as a transshipment by successive shortest paths; the optimal
/// potentials give phi. Requires sum coef = 0 (true for Stokes coefficients).
std::vector<double> transport_potentials(const Graph& g, std::vector<double> excess,
                                         double lipschitz) {
  const std::size_t n = g.size();
  std::vector<double> phi(n, 0.0);
  if (lipschitz <= 0) return phi;
  std::vector<double> pot(n, 0.0);  // Johnson potentials
  const double inf = std::numeric_limits<double>::infinity();
  const double tol = 1e-11;
  auto cost_of = [&](const Rat& w) { return lipschitz * rat_to_double(w); };

  while (true) {
    std::size_t source = n;
    for (std::size_t v = 0; v < n; ++v)
      if (excess[v] > tol) {
        source = v;
        break;
      }
    if (source == n) break;

    // Dijkstra with reduced costs over the residual graph (all arcs have
    // infinite capacity, so every direction is always available).
    std::vector<double> dist(n, inf);
    std::vector<std::size_t> pred(n, n);
    std::vector<char> done(n, 0);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[source] = 0;
    pq.push({0.0, source});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (const auto& [v, w] : g.adjacency()[u]) {
        if (done[v]) continue;
        double rc = cost_of(w) + pot[u] - pot[v];
        if (rc < 0) rc = 0;  // numeric dust
        if (du + rc < dist[v] - 1e-15) {
          dist[v] = du + rc;
          pred[v] = u;
          pq.push({dist[v], v});
        }
      }
    }

    // Nearest deficit.
    std::size_t sink = n;
    double best = inf;
    for (std::size_t v = 0; v < n; ++v)
      if (excess[v] < -tol && dist[v] < best) {
        best = dist[v];
        sink = v;
      }
    if (sink == n) throw Error("transport: unbalanced supplies (internal)");

    double amount = std::min(excess[source], -excess[sink]);
    excess[source] -= amount;
    excess[sink] += amount;
    for (std::size_t v = 0; v < n; ++v)
      if (dist[v] < inf) pot[v] += dist[v];
  }

  // phi = -potentials: reduced-cost optimality makes it Lipschitz feasible.
  for (std::size_t v = 0; v < n; ++v) phi[v] = -pot[v];
  return phi;
}

void enforce_lipschitz(const Graph& g, std::vector<double>& f, double lipschitz) {
  double worst = 1.0;
  for (const auto& e : g.edges()) {
    double bound = lipschitz * rat_to_double(e.w);
    if (bound <= 0) continue;
    double ratio = std::fabs(f[e.u] - f[e.v]) / bound;
    worst = std::max(worst, ratio);
  }
  if (worst > 1.0) {
    double s = 1.0 / (worst * (1 + 1e-12));
    for (double& x : f) x *= s;
  }
}

}  // namespace

double stokes_sum(const Graph& g, const Loop& loop, const std::vector<double>& f,
                  const std::vector<double>& pi) {
  double acc = 0;
  for (const auto& e : loop_edge_chain(g, loop))
    acc += e.coeff * 0.5 * (f[e.u] + f[e.v]) * (pi[e.v] - pi[e.u]);
  return acc;
}

HLambdaResult h_lambda_estimate(const Graph& g, const Loop& loop, double lambda,
                                double r, int rounds) {
  if (lambda <= 0 || r <= 0) throw ValidationError("lambda and r must be positive");
  const std::size_t n = g.size();
  std::vector<EdgeChain> chain = loop_edge_chain(g, loop);

  // Lipschitz check for the loop under unit-interval parametrization.
  double length = 0;
  for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
    std::size_t a = loop.vertices[i];
    std::size_t b = loop.vertices[(i + 1) % loop.vertices.size()];
    bool found = false;
    for (const auto& [nb, w] : g.adjacency()[a])
      if (nb == b) {
        length += rat_to_double(w);
        found = true;
        break;
      }
    if (!found) throw ValidationError("loop uses a non-edge");
  }
  if (length > lambda * r * (1 + 1e-9))
    throw ValidationError("loop length " + std::to_string(length) +
                          " exceeds lambda*r = " + std::to_string(lambda * r));

  const double lip = lambda / r;
  HLambdaResult res;
  res.cap = std::pow(lambda, 4.0);

  // Warm start: tent function over a half geodesic between two far loop
  // vertices, paired with a rescaled distance function.
  std::vector<double> f(n, 0.0), pi(n, 0.0);
  {
    std::size_t s = loop.vertices[0];
    std::size_t t = loop.vertices[loop.vertices.size() / 2];
    if (s != t) {
      std::vector<std::size_t> path = g.shortest_path(s, t);
      std::vector<std::size_t> half(path.begin(),
                                    path.begin() + (path.size() + 1) / 2);
      std::vector<Rat> dist_half = g.multi_source_distances(half);
      std::vector<Rat> dist_mid = g.dijkstra(path[path.size() / 2]);
      for (std::size_t v = 0; v < n; ++v) {
        f[v] = std::max(0.0, 1.0 - (2.0 / r) * rat_to_double(dist_half[v]));
        pi[v] = rat_to_double(dist_mid[v]) / r;
      }
      enforce_lipschitz(g, f, lip);
      enforce_lipschitz(g, pi, lip);
    }
  }
  res.value = stokes_sum(g, loop, f, pi);
  res.witnesses = {f, pi, lip};

  for (int round = 0; round < rounds; ++round) {
    // pi step: coefficients of pi_v for fixed f.
    std::vector<double> a(n, 0.0);
    for (const auto& e : chain) {
      double fmid = 0.5 * (f[e.u] + f[e.v]);
      a[e.v] += e.coeff * fmid;
      a[e.u] -= e.coeff * fmid;
    }
    std::vector<double> cand = transport_potentials(g, a, lip);
    enforce_lipschitz(g, cand, lip);
    double v1 = stokes_sum(g, loop, f, cand);
    std::vector<double> neg = cand;
    for (double& x : neg) x = -x;
    double v2 = stokes_sum(g, loop, f, neg);
    pi = v1 >= v2 ? cand : neg;

    // f step: coefficients of f_v for fixed pi.
    std::vector<double> b(n, 0.0);
    for (const auto& e : chain) {
      double dpi = pi[e.v] - pi[e.u];
      b[e.u] += e.coeff * 0.5 * dpi;
      b[e.v] += e.coeff * 0.5 * dpi;
    }
    cand = transport_potentials(g, b, lip);
    enforce_lipschitz(g, cand, lip);
    v1 = stokes_sum(g, loop, cand, pi);
    neg = cand;
    for (double& x : neg) x = -x;
    v2 = stokes_sum(g, loop, neg, pi);
    f = v1 >= v2 ? cand : neg;

    double val = stokes_sum(g, loop, f, pi);
    if (val > res.value) {
      res.value = val;
      res.witnesses = {f, pi, lip};
    }
  }

  if (res.value > res.cap * (1 + 1e-6))
    throw Error("H_lambda estimate exceeded the lambda^4 a-priori bound");
  if (res.value < 0) {
    // The zero pair is always feasible.
    res.value = 0;
    res.witnesses = {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), lip};
  }
  return res;
}

}  // namespace mfill
