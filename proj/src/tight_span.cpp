#include "mfill/tight_span.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mfill/errors.hpp"
#include "mfill/rng.hpp"

namespace mfill {

bool is_extremal_function(const FiniteMetricSpace& m, const std::vector<Rat>& f) {
  const std::size_t n = m.size();
  if (f.size() != n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    Rat bound = -f[x];  // y = x term
    for (std::size_t y = 0; y < n; ++y)
      if (y != x) bound = std::max(bound, m.distance(x, y) - f[y]);
    if (f[x] != bound) return false;
  }
  return true;
}

std::vector<Rat> descend_to_extremal(const FiniteMetricSpace& m, std::vector<Rat> f,
                                     const std::vector<std::size_t>& order) {
  const std::size_t n = m.size();
  for (int sweep = 0; sweep < static_cast<int>(4 * n + 16); ++sweep) {
    bool changed = false;
    for (std::size_t x : order) {
      Rat bound = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (y != x) bound = std::max(bound, m.distance(x, y) - f[y]);
      if (bound < 0) bound = 0;
      if (f[x] != bound) {
        f[x] = bound;
        changed = true;
      }
    }
    if (!changed) return f;
  }
  throw Error("extremal descent did not stabilize");
}

namespace {

Rat sup_dist(const std::vector<Rat>& f, const std::vector<Rat>& g) {
  Rat best = 0;
  for (std::size_t i = 0; i < f.size(); ++i) best = std::max(best, rat_abs(f[i] - g[i]));
  return best;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

}  // namespace

TightSpanResult tight_span(const FiniteMetricSpace& m, const Rat& resolution,
                           std::size_t point_cap) {
  const std::size_t n = m.size();
  if (n == 0) throw ValidationError("empty metric space");
  if (n > point_cap)
    throw CapError("tight span point count " + std::to_string(n) + " exceeds cap " +
                   std::to_string(point_cap));
  if (resolution <= 0) throw ValidationError("resolution must be positive");

  // Samples are net-pruned on insertion: anything within resolution/2 of
  // an existing sample is redundant, and a hard cap keeps high-dimensional
  // envelopes from blowing up the distance matrix. Anchors (and the exact
  // Steiner point of 3-point spaces) are always kept.
  const std::size_t max_samples = 600;
  const Rat net_sep = resolution / 2;
  const double net_d = rat_to_double(net_sep);
  std::vector<std::vector<Rat>> samples;
  std::vector<std::vector<double>> samples_d;  // prescreen fingerprints
  auto to_d = [](const std::vector<Rat>& f) {
    std::vector<double> out;
    out.reserve(f.size());
    for (const Rat& v : f) out.push_back(rat_to_double(v));
    return out;
  };
  auto sup_gap = [](const std::vector<Rat>& f, const std::vector<Rat>& g) {
    Rat best = 0;
    for (std::size_t i = 0; i < f.size(); ++i) best = std::max(best, rat_abs(f[i] - g[i]));
    return best;
  };
  auto add_forced = [&](std::vector<Rat> f) {
    for (const auto& g : samples)
      if (g == f) return;
    samples_d.push_back(to_d(f));
    samples.push_back(std::move(f));
  };
  auto add = [&](std::vector<Rat> f) {
    if (samples.size() >= max_samples) return;
    std::vector<double> fd = to_d(f);
    for (std::size_t s = 0; s < samples.size(); ++s) {
      double gap = 0;
      for (std::size_t i = 0; i < fd.size(); ++i)
        gap = std::max(gap, std::fabs(fd[i] - samples_d[s][i]));
      if (gap < net_d - 1e-9) return;              // certainly too close
      if (gap > net_d + 1e-9) continue;            // certainly separated
      if (sup_gap(f, samples[s]) < net_sep) return;  // borderline: exact
    }
    samples_d.push_back(std::move(fd));
    samples.push_back(std::move(f));
  };

  // Anchors h_x = d(x, .) are extremal and come first.
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Rat> h(n);
    for (std::size_t y = 0; y < n; ++y) h[y] = m.distance(x, y);
    add_forced(std::move(h));
  }
  std::vector<std::size_t> anchors = identity_order(n);

  // Exact Steiner point of a 3-point space (the tripod center).
  if (n == 3) {
    std::vector<Rat> s(3);
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
      s[i] = (m.distance(i, j) + m.distance(i, k) - m.distance(j, k)) / 2;
    }
    add_forced(std::move(s));
  }

  // Pair-interpolation seeds at the requested resolution, then random
  // descent orders to spread over higher-dimensional parts of E(m).
  const std::vector<std::size_t> base_order = identity_order(n);
  Rng rng(0xe77eu + n);
  auto random_order = [&]() {
    std::vector<std::size_t> o = identity_order(n);
    for (std::size_t i = n; i > 1; --i) std::swap(o[i - 1], o[rng.next_below(i)]);
    return o;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Rat dxy = m.distance(x, y);
      long steps = 1 + static_cast<long>(rat_to_double(dxy / resolution));
      // Round up to a power of two: dyadic interpolation keeps sample
      // coordinates on a small common denominator (fast paths downstream).
      long pow2 = 1;
      while (pow2 < steps) pow2 *= 2;
      steps = std::min<long>(pow2, 64);
      for (long k = 1; k < steps; ++k) {
        Rat lam(k, steps);
        std::vector<Rat> f(n);
        for (std::size_t w = 0; w < n; ++w)
          f[w] = m.distance(x, w) * (1 - lam) + m.distance(y, w) * lam;
        add(descend_to_extremal(m, f, base_order));
        add(descend_to_extremal(m, std::move(f), random_order()));
      }
    }

  const std::size_t random_seeds = 8 * n;
  for (std::size_t t = 0; t < random_seeds; ++t) {
    // Random feasible start: dyadic convex combination of anchors plus
    // dyadic slack (keeps all samples on a small common denominator).
    std::vector<long> mass(n, 0);
    for (int ball = 0; ball < 64; ++ball) mass[rng.next_below(n)]++;
    std::vector<Rat> f(n, Rat(0));
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t i = 0; i < n; ++i)
        if (mass[i] > 0) f[w] += Rat(mass[i], 64) * m.distance(i, w);
      f[w] += Rat(static_cast<long>(rng.next_below(8)), 8) * resolution;
    }
    add(descend_to_extremal(m, std::move(f), random_order()));
  }

  TightSpanResult res;
  res.functions = std::move(samples);
  res.anchor_indices = anchors;

  std::vector<std::string> labels;
  labels.reserve(res.functions.size());
  for (std::size_t i = 0; i < res.functions.size(); ++i) {
    if (i < n)
      labels.push_back("h:" + m.labels()[i]);
    else
      labels.push_back("e" + std::to_string(i - n));
  }
  std::vector<std::vector<Rat>> d(res.functions.size(),
                                  std::vector<Rat>(res.functions.size(), Rat(0)));
  for (std::size_t i = 0; i < res.functions.size(); ++i)
    for (std::size_t j = i + 1; j < res.functions.size(); ++j)
      d[i][j] = d[j][i] = sup_dist(res.functions[i], res.functions[j]);
  res.space = FiniteMetricSpace(std::move(labels), std::move(d),
                                FiniteMetricSpace::Trusted{});
  return res;
}

ThickeningResult delta_thickening(const Graph& g, const Rat& delta, std::size_t ball_cap) {
  if (delta <= 0) throw ValidationError("delta must be positive");
  const std::size_t n = g.size();
  FiniteMetricSpace base = graph_metric(g);
  std::vector<std::size_t> net = separated_net(base, delta);

  struct Envelope {
    std::size_t z;
    std::vector<std::size_t> ball;            // original vertex ids
    std::vector<std::vector<Rat>> functions;  // non-anchor samples only
    std::vector<std::vector<Rat>> to_anchor;  // [sample][ball pos] sup distance
    FiniteMetricSpace ball_metric;            // length metric on the ball
    Envelope() : ball_metric({}, {}, FiniteMetricSpace::Trusted{}) {}
  };

  std::vector<Envelope> envs;
  Rat max_diam = 0;
  const Rat ball_radius = delta * 8;
  const Rat prune_sep = delta / 4;

  for (std::size_t z : net) {
    Envelope env;
    env.z = z;
    for (std::size_t v = 0; v < n; ++v)
      if (base.distance(z, v) <= ball_radius) env.ball.push_back(v);
    if (env.ball.size() > ball_cap)
      throw CapError("ball around '" + g.labels()[z] + "' has " +
                     std::to_string(env.ball.size()) + " points, cap " +
                     std::to_string(ball_cap));

    // Length metric of the ball: shortest paths inside the induced subgraph.
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < env.ball.size(); ++i) pos[env.ball[i]] = i;
    std::vector<Graph::Edge> edges;
    for (const auto& e : g.edges())
      if (pos.count(e.u) && pos.count(e.v)) edges.push_back({pos[e.u], pos[e.v], e.w});
    std::vector<std::string> ball_labels;
    for (std::size_t v : env.ball) ball_labels.push_back(g.labels()[v]);
    Graph ball_graph(std::move(ball_labels), std::move(edges));
    env.ball_metric = graph_metric(ball_graph);

    TightSpanResult ts = tight_span(env.ball_metric, prune_sep, ball_cap);

    // Keep non-anchor samples pruned to a delta/4-net (anchors implicit:
    // they are the ball vertices themselves).
    std::vector<std::vector<Rat>> kept;
    for (std::size_t i = env.ball.size(); i < ts.functions.size(); ++i) {
      const auto& f = ts.functions[i];
      bool near_anchor = false;
      for (std::size_t a = 0; a < env.ball.size(); ++a)
        if (sup_dist(f, ts.functions[a]) < prune_sep) {
          near_anchor = true;
          break;
        }
      if (near_anchor) continue;
      bool separated = true;
      for (const auto& k : kept)
        if (sup_dist(f, k) < prune_sep) {
          separated = false;
          break;
        }
      if (separated) kept.push_back(f);
    }
    env.functions = std::move(kept);
    env.to_anchor.assign(env.functions.size(), std::vector<Rat>(env.ball.size()));
    for (std::size_t s = 0; s < env.functions.size(); ++s)
      for (std::size_t a = 0; a < env.ball.size(); ++a) {
        Rat best = 0;
        for (std::size_t w = 0; w < env.ball.size(); ++w)
          best = std::max(best,
                          rat_abs(env.functions[s][w] - env.ball_metric.distance(a, w)));
        env.to_anchor[s][a] = best;
      }

    for (std::size_t i = 0; i < env.functions.size(); ++i) {
      for (std::size_t j = i + 1; j < env.functions.size(); ++j)
        max_diam = std::max(max_diam, sup_dist(env.functions[i], env.functions[j]));
      for (std::size_t a = 0; a < env.ball.size(); ++a)
        max_diam = std::max(max_diam, env.to_anchor[i][a]);
    }
    envs.push_back(std::move(env));
  }

  // Assemble the glued space: original vertices first, then per-net samples.
  std::vector<std::string> labels = g.labels();
  struct SampleRef {
    std::size_t env, idx;
  };
  std::vector<SampleRef> sample_refs;
  for (std::size_t e = 0; e < envs.size(); ++e)
    for (std::size_t s = 0; s < envs[e].functions.size(); ++s) {
      labels.push_back("t:" + g.labels()[envs[e].z] + ":" + std::to_string(s));
      sample_refs.push_back({e, s});
    }

  const std::size_t total = labels.size();
  std::vector<std::vector<Rat>> d(total, std::vector<Rat>(total, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = base.distance(i, j);

  // Original vertex u to sample (z, f): route through the ball boundary:
  // min over y in B_z of d_X(u, y) + d_z(h_y, f).
  for (std::size_t s = 0; s < sample_refs.size(); ++s) {
    const Envelope& env = envs[sample_refs[s].env];
    const auto& to_anchor = env.to_anchor[sample_refs[s].idx];
    for (std::size_t u = 0; u < n; ++u) {
      Rat best = -1;
      for (std::size_t a = 0; a < env.ball.size(); ++a) {
        Rat cand = base.distance(u, env.ball[a]) + to_anchor[a];
        if (best < 0 || cand < best) best = cand;
      }
      d[u][n + s] = d[n + s][u] = best;
    }
  }

  // Sample to sample.
  for (std::size_t s1 = 0; s1 < sample_refs.size(); ++s1)
    for (std::size_t s2 = s1 + 1; s2 < sample_refs.size(); ++s2) {
      const Envelope& e1 = envs[sample_refs[s1].env];
      const Envelope& e2 = envs[sample_refs[s2].env];
      const auto& ta1 = e1.to_anchor[sample_refs[s1].idx];
      const auto& ta2 = e2.to_anchor[sample_refs[s2].idx];
      Rat best = -1;
      for (std::size_t a = 0; a < e1.ball.size(); ++a)
        for (std::size_t b = 0; b < e2.ball.size(); ++b) {
          Rat cand = ta1[a] + base.distance(e1.ball[a], e2.ball[b]) + ta2[b];
          if (best < 0 || cand < best) best = cand;
        }
      if (sample_refs[s1].env == sample_refs[s2].env) {
        Rat direct = sup_dist(e1.functions[sample_refs[s1].idx],
                              e1.functions[sample_refs[s2].idx]);
        if (direct < best) best = direct;
      }
      d[n + s1][n + s2] = d[n + s2][n + s1] = best;
    }

  ThickeningResult res;
  res.net = net;
  res.max_envelope_diameter = max_diam;
  res.original_indices = identity_order(n);
  res.space = FiniteMetricSpace(std::move(labels), std::move(d),
                                FiniteMetricSpace::Trusted{});
  return res;
}

}  // namespace mfill
