#include "mfill/complex2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>

#include "mfill/errors.hpp"
#include "mfill/simplex_exact.hpp"

namespace mfill {

SimplicialComplex2::SimplicialComplex2(
    std::size_t vertex_count, std::vector<std::array<std::size_t, 3>> triangles,
    std::vector<Rat> weights, std::vector<std::pair<std::size_t, std::size_t>> extra_edges)
    : vertex_count_(vertex_count), tris_(std::move(triangles)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(tris_.size(), Rat(1));
  if (weights_.size() != tris_.size())
    throw ValidationError("weight count does not match triangle count");
  for (const Rat& w : weights_)
    if (w <= 0) throw ValidationError("triangle weights must be positive");

  auto add_edge = [&](std::size_t u, std::size_t v) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("degenerate edge");
    auto key = std::minmax(u, v);
    auto [it, fresh] = edge_lookup_.try_emplace({key.first, key.second}, edges_.size());
    if (fresh) edges_.push_back({key.first, key.second});
    return it->second;
  };

  for (const auto& t : tris_) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw ValidationError("degenerate triangle");
    add_edge(t[0], t[1]);
    add_edge(t[1], t[2]);
    add_edge(t[2], t[0]);
  }
  for (const auto& [u, v] : extra_edges) add_edge(u, v);

  edge_star_.assign(edges_.size(), {});
  for (std::size_t t = 0; t < tris_.size(); ++t)
    for (const auto& [e, s] : triangle_edges(t)) edge_star_[e].push_back(t);
}

void SimplicialComplex2::set_coords(std::vector<std::vector<Rat>> coords) {
  if (coords.size() != vertex_count_)
    throw ValidationError("coordinate count does not match vertex count");
  for (const auto& p : coords)
    if (p.size() != 2 && p.size() != 3)
      throw ValidationError("coordinates must be 2d or 3d");
  coords_ = std::move(coords);
}

void SimplicialComplex2::set_vertex_metric(std::vector<std::vector<Rat>> metric) {
  if (metric.size() != vertex_count_)
    throw ValidationError("metric size does not match vertex count");
  for (const auto& row : metric)
    if (row.size() != vertex_count_) throw ValidationError("metric matrix not square");
  vertex_metric_ = std::move(metric);
}

std::size_t SimplicialComplex2::edge_index(std::size_t u, std::size_t v) const {
  auto found = find_edge(u, v);
  if (!found) throw ValidationError("edge not present in complex");
  return *found;
}

std::optional<std::size_t> SimplicialComplex2::find_edge(std::size_t u, std::size_t v) const {
  auto key = std::minmax(u, v);
  auto it = edge_lookup_.find({key.first, key.second});
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::array<std::pair<std::size_t, int>, 3> SimplicialComplex2::triangle_edges(
    std::size_t t) const {
  const auto& tri = tris_[t];
  std::array<std::pair<std::size_t, int>, 3> out;
  for (int s = 0; s < 3; ++s) {
    std::size_t u = tri[static_cast<std::size_t>(s)];
    std::size_t v = tri[static_cast<std::size_t>((s + 1) % 3)];
    auto key = std::minmax(u, v);
    std::size_t e = edge_lookup_.at({key.first, key.second});
    out[static_cast<std::size_t>(s)] = {e, u < v ? 1 : -1};
  }
  return out;
}

bool SimplicialComplex2::is_surface_like() const {
  for (const auto& star : edge_star_)
    if (star.size() > 2) return false;
  return true;
}

double SimplicialComplex2::edge_length_double(std::size_t e) const {
  if (coords_.empty()) return 1.0;
  const auto& [u, v] = edges_[e];
  double acc = 0;
  for (std::size_t k = 0; k < coords_[u].size(); ++k) {
    double d = rat_to_double(coords_[u][k] - coords_[v][k]);
    acc += d * d;
  }
  return std::sqrt(acc);
}

Chain SimplicialComplex2::loop_chain(const Loop& loop) const {
  Chain z;
  z.dim = 1;
  const std::size_t n = loop.vertices.size();
  if (n < 2) return z;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t u = loop.vertices[i];
    std::size_t v = loop.vertices[(i + 1) % n];
    if (u == v) throw ValidationError("loop repeats a vertex consecutively");
    std::size_t e = edge_index(u, v);
    z.add(e, Rat(u < v ? 1 : -1));
  }
  return z;
}

double SimplicialComplex2::loop_length_double(const Loop& loop) const {
  double acc = 0;
  const std::size_t n = loop.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t u = loop.vertices[i];
    std::size_t v = loop.vertices[(i + 1) % n];
    acc += edge_length_double(edge_index(u, v));
  }
  return acc;
}

Chain SimplicialComplex2::boundary(const Chain& c) const {
  Chain out;
  if (c.dim == 2) {
    out.dim = 1;
    for (const auto& [t, coeff] : c.coeffs) {
      if (t >= tris_.size()) throw ValidationError("chain references missing triangle");
      for (const auto& [e, s] : triangle_edges(t)) out.add(e, coeff * s);
    }
  } else {
    out.dim = 0;
    for (const auto& [e, coeff] : c.coeffs) {
      if (e >= edges_.size()) throw ValidationError("chain references missing edge");
      out.add(edges_[e].second, coeff);
      out.add(edges_[e].first, -coeff);
    }
  }
  return out;
}

bool SimplicialComplex2::is_cycle(const Chain& z) const {
  if (z.dim != 1) return false;
  return boundary(z).coeffs.empty();
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
SimplicialComplex2::boundary_matrices() const {
  std::vector<std::vector<int>> d1(vertex_count_, std::vector<int>(edges_.size(), 0));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    d1[edges_[e].first][e] -= 1;
    d1[edges_[e].second][e] += 1;
  }
  std::vector<std::vector<int>> d2(edges_.size(), std::vector<int>(tris_.size(), 0));
  for (std::size_t t = 0; t < tris_.size(); ++t)
    for (const auto& [e, s] : triangle_edges(t)) d2[e][t] += s;
  return {std::move(d1), std::move(d2)};
}

namespace {

/// Sparse column over the rationals, kept sorted by row.
using SparseCol = std::vector<std::pair<std::size_t, Rat>>;

SparseCol axpy(const SparseCol& a, const Rat& f, const SparseCol& b) {
  // a + f*b, merged.
  SparseCol out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = f * b[j].second;
      if (v != 0) out.push_back({b[j].first, v});
      ++j;
    } else {
      Rat v = a[i].second + f * b[j].second;
      if (v != 0) out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental column reduction (pivot = largest row index), exact.
struct Reducer {
  std::map<std::size_t, SparseCol> by_pivot;

  // Reduces col in place; returns true if it vanished.
  bool reduce(SparseCol& col) const {
    while (!col.empty()) {
      std::size_t piv = col.back().first;
      auto it = by_pivot.find(piv);
      if (it == by_pivot.end()) return false;
      Rat f = -col.back().second / it->second.back().second;
      col = axpy(col, f, it->second);
    }
    return true;
  }

  // Adds a column; returns false if it reduced to zero (dependent).
  bool add(SparseCol col) {
    if (reduce(col)) return false;
    by_pivot.emplace(col.back().first, std::move(col));
    return true;
  }

  std::size_t rank() const { return by_pivot.size(); }
};

SparseCol chain_to_col(const Chain& z) {
  SparseCol col(z.coeffs.begin(), z.coeffs.end());
  return col;  // std::map iteration is already row-sorted
}

SparseCol triangle_col(const SimplicialComplex2& k, std::size_t t) {
  Chain c;
  c.dim = 1;
  for (const auto& [e, s] : k.triangle_edges(t)) c.add(e, Rat(s));
  return chain_to_col(c);
}

void check_cycle_input(const SimplicialComplex2& k, const Chain& z) {
  if (z.dim != 1) throw ValidationError("filling input must be a 1-chain");
  for (const auto& [e, c] : z.coeffs)
    if (e >= k.edges().size()) throw ValidationError("chain references missing edge");
  if (!k.is_cycle(z)) throw ValidationError("chain is not a cycle (nonzero boundary)");
}

/// Thrown when a closed dual component carries an orientation-reversing
/// cycle (lambda pinned on a closed component); the forest reconstruction
/// of the dual does not apply there, so the caller falls back to the
/// general simplex path.
struct NeedsGeneralPath {};

/// Exact surface-complex filling: dual-graph propagation + weighted medians,
/// with the LP dual certificate rebuilt along the propagation forest.
struct SurfaceFill {
  const SimplicialComplex2& k;
  const Chain& z;
  bool integral;

  std::vector<Rat> z_dense;
  std::vector<Rat> c_a, c_b;          // c_t = a_t + b_t * lambda(comp)
  std::vector<int> comp_of;
  std::vector<std::size_t> parent_edge;  // per triangle; npos for closed roots
  std::vector<std::vector<std::size_t>> comp_tris;
  std::vector<char> comp_closed;
  std::vector<std::size_t> comp_root;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SurfaceFill(const SimplicialComplex2& kk, const Chain& zz, bool integ)
      : k(kk), z(zz), integral(integ) {}

  FillResult run() {
    const auto& tris = k.triangles();
    const auto& stars = k.edge_stars();
    const std::size_t T = tris.size();
    z_dense.assign(k.edges().size(), Rat(0));
    for (const auto& [e, c] : z.coeffs) z_dense[e] = c;

    // Bare edges cannot carry a boundary.
    for (std::size_t e = 0; e < stars.size(); ++e)
      if (stars[e].empty() && z_dense[e] != 0)
        throw InfeasibleError("cycle is not a boundary: edge outside every 2-cell");

    c_a.assign(T, Rat(0));
    c_b.assign(T, Rat(0));
    comp_of.assign(T, -1);
    parent_edge.assign(T, npos);

    auto sign_of = [&](std::size_t t, std::size_t e) {
      for (const auto& [ee, s] : k.triangle_edges(t))
        if (ee == e) return s;
      throw Error("edge not on triangle");
    };

    int ncomp = 0;
    for (std::size_t t0 = 0; t0 < T; ++t0) {
      if (comp_of[t0] != -1) continue;
      int comp = ncomp++;
      // Collect the dual component.
      std::vector<std::size_t> members;
      std::deque<std::size_t> q = {t0};
      comp_of[t0] = comp;
      while (!q.empty()) {
        std::size_t t = q.front();
        q.pop_front();
        members.push_back(t);
        for (const auto& [e, s] : k.triangle_edges(t))
          for (std::size_t t2 : stars[e])
            if (comp_of[t2] == -1) {
              comp_of[t2] = comp;
              q.push_back(t2);
            }
      }
      std::sort(members.begin(), members.end());

      // Root: prefer a triangle pinned by a boundary edge.
      std::size_t root = npos, root_edge = npos;
      for (std::size_t t : members) {
        for (const auto& [e, s] : k.triangle_edges(t))
          if (stars[e].size() == 1) {
            root = t;
            root_edge = e;
            break;
          }
        if (root != npos) break;
      }
      bool closed = root == npos;
      if (closed) root = members[0];

      if (closed) {
        c_a[root] = 0;
        c_b[root] = 1;  // symbolic lambda
      } else {
        int s = sign_of(root, root_edge);
        c_a[root] = z_dense[root_edge] / s;
        c_b[root] = 0;
        parent_edge[root] = root_edge;
      }

      // Propagate over shared edges.
      std::vector<char> seen(members.size(), 0);
      std::map<std::size_t, std::size_t> pos;
      for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
      std::deque<std::size_t> bfs = {root};
      seen[pos[root]] = 1;
      while (!bfs.empty()) {
        std::size_t t = bfs.front();
        bfs.pop_front();
        for (const auto& [e, s] : k.triangle_edges(t))
          for (std::size_t t2 : stars[e]) {
            if (t2 == t || seen[pos[t2]]) continue;
            int s2 = sign_of(t2, e);
            // s*c_t + s2*c_t2 = z_e
            c_a[t2] = (z_dense[e] - Rat(s) * c_a[t]) / s2;
            c_b[t2] = (Rat(0) - Rat(s) * c_b[t]) / s2;
            parent_edge[t2] = e;
            seen[pos[t2]] = 1;
            bfs.push_back(t2);
          }
      }

      comp_tris.push_back(members);
      comp_closed.push_back(closed);
      comp_root.push_back(root);
    }

    // Verify every edge constraint; closed components may pin lambda.
    std::vector<char> lambda_pinned(static_cast<std::size_t>(ncomp), 0);
    std::vector<Rat> lambda_value(static_cast<std::size_t>(ncomp), Rat(0));
    auto pin = [&](int comp, const Rat& v) {
      if (lambda_pinned[static_cast<std::size_t>(comp)]) {
        if (lambda_value[static_cast<std::size_t>(comp)] != v)
          throw InfeasibleError("cycle is not a boundary in this complex");
      } else {
        lambda_pinned[static_cast<std::size_t>(comp)] = 1;
        lambda_value[static_cast<std::size_t>(comp)] = v;
      }
    };
    for (std::size_t e = 0; e < stars.size(); ++e) {
      if (stars[e].empty()) continue;
      Rat const_part = -z_dense[e];
      Rat coef_part = 0;
      int comp = comp_of[stars[e][0]];
      for (std::size_t t : stars[e]) {
        int s = sign_of(t, e);
        const_part += Rat(s) * c_a[t];
        coef_part += Rat(s) * c_b[t];
      }
      if (coef_part == 0) {
        if (const_part != 0)
          throw InfeasibleError("cycle is not a boundary in this complex");
      } else {
        pin(comp, -const_part / coef_part);
      }
    }

    // Optimize the free closed components by weighted median, then
    // substitute all lambdas.
    std::vector<Rat> lam(static_cast<std::size_t>(ncomp), Rat(0));
    for (int comp = 0; comp < ncomp; ++comp) {
      std::size_t ci = static_cast<std::size_t>(comp);
      if (lambda_pinned[ci]) {
        if (comp_closed[ci]) throw NeedsGeneralPath{};
        lam[ci] = lambda_value[ci];
        continue;
      }
      if (!comp_closed[ci]) continue;  // open components have no freedom
      std::vector<std::pair<Rat, Rat>> breaks;  // (breakpoint, weight)
      Rat total = 0;
      for (std::size_t t : comp_tris[ci]) {
        breaks.push_back({-c_a[t] * c_b[t], k.weights()[t]});
        total += k.weights()[t];
      }
      std::sort(breaks.begin(), breaks.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      Rat cum = 0;
      Rat best = breaks.back().first;
      for (const auto& [x, w] : breaks) {
        cum += w;
        if (cum * 2 >= total) {
          best = x;
          break;
        }
      }
      if (integral) {
        // Integral cycles propagate to integral breakpoints, but round
        // defensively and compare both neighbors.
        BigInt num = boost::multiprecision::numerator(best);
        BigInt den = boost::multiprecision::denominator(best);
        BigInt fl;
        if (num >= 0)
          fl = num / den;
        else
          fl = -((-num + den - 1) / den);
        Rat lo(fl), hi(fl + 1);
        auto cost = [&](const Rat& l) {
          Rat acc = 0;
          for (std::size_t t : comp_tris[ci]) acc += k.weights()[t] * rat_abs(c_a[t] + c_b[t] * l);
          return acc;
        };
        best = cost(lo) <= cost(hi) ? lo : hi;
      }
      lam[ci] = best;
    }

    FillResult res;
    res.filling.dim = 2;
    res.area = 0;
    std::vector<Rat> c_val(T);
    for (std::size_t t = 0; t < T; ++t) {
      c_val[t] = c_a[t] + c_b[t] * lam[static_cast<std::size_t>(comp_of[t])];
      if (c_val[t] != 0) res.filling.coeffs.emplace(t, c_val[t]);
      res.area += k.weights()[t] * rat_abs(c_val[t]);
    }

    // Dual certificate: sigma_t = w_t*sgn(c_t), with the slack on zero
    // triangles of free closed components distributed to stay orthogonal
    // to the kernel vector b; then solve d2^T y = sigma on the forest.
    std::vector<Rat> sigma(T);
    for (std::size_t t = 0; t < T; ++t)
      sigma[t] = k.weights()[t] * rat_sign(c_val[t]);
    for (int comp = 0; comp < ncomp; ++comp) {
      std::size_t ci = static_cast<std::size_t>(comp);
      if (!comp_closed[ci] || lambda_pinned[ci]) continue;
      Rat overflow = 0;  // sum sigma_t b_t must vanish
      for (std::size_t t : comp_tris[ci]) overflow += sigma[t] * c_b[t];
      Rat rem = -overflow;
      for (std::size_t t : comp_tris[ci]) {
        if (rem == 0) break;
        if (c_val[t] != 0) continue;
        // sigma_t = give * b_t contributes exactly `give` to sum sigma_t b_t.
        Rat cap = k.weights()[t];
        Rat give = rem > 0 ? std::min(rat_abs(rem), cap) : -std::min(rat_abs(rem), cap);
        sigma[t] = give * c_b[t];
        rem -= give;
      }
      if (rem != 0) throw Error("median optimality violated (internal)");
    }

    std::vector<Rat> y(k.edges().size(), Rat(0));
    // Children before parents: reverse BFS discovery order per component.
    for (int comp = 0; comp < ncomp; ++comp) {
      std::size_t ci = static_cast<std::size_t>(comp);
      std::vector<std::size_t> order;
      std::deque<std::size_t> q2 = {comp_root[ci]};
      std::vector<std::size_t> stack;
      std::map<std::size_t, char> seen2;
      seen2[comp_root[ci]] = 1;
      while (!q2.empty()) {
        std::size_t t = q2.front();
        q2.pop_front();
        order.push_back(t);
        for (const auto& [e, s] : k.triangle_edges(t))
          for (std::size_t t2 : stars[e]) {
            if (t2 == t || seen2.count(t2)) continue;
            if (parent_edge[t2] == e) {
              seen2[t2] = 1;
              q2.push_back(t2);
            }
          }
      }
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t t = *it;
        std::size_t pe = parent_edge[t];
        if (pe == npos) continue;  // closed-component root handled by kernel
        Rat acc = sigma[t];
        int psign = 0;
        for (const auto& [e, s] : k.triangle_edges(t)) {
          if (e == pe) {
            psign = s;
            continue;
          }
          acc -= Rat(s) * y[e];
        }
        y[pe] = acc / psign;
      }
      if (comp_closed[ci]) {
        // The root equation must close automatically.
        std::size_t t = comp_root[ci];
        Rat acc = 0;
        for (const auto& [e, s] : k.triangle_edges(t)) acc += Rat(s) * y[e];
        if (acc != sigma[t]) throw Error("dual reconstruction failed (internal)");
      }
    }

    // Exact certificate checks.
    Rat dual_obj = 0;
    for (const auto& [e, zc] : z.coeffs) dual_obj += y[e] * zc;
    if (dual_obj != res.area) throw Error("dual objective mismatch (internal)");
    for (std::size_t t = 0; t < T; ++t) {
      Rat acc = 0;
      for (const auto& [e, s] : k.triangle_edges(t)) acc += Rat(s) * y[e];
      if (rat_abs(acc) > k.weights()[t]) throw Error("dual infeasible (internal)");
    }
    res.dual = std::move(y);
    return res;
  }
};



FillResult general_fill(const SimplicialComplex2& k, const Chain& z, FillMode mode,
                        std::size_t cap) {
  const std::size_t T = k.triangles().size();
  const std::size_t E = k.edges().size();
  if (T > env_size_cap(cap))
    throw CapError("non-surface filling instance exceeds the simplex cap (" +
                   std::to_string(T) + " triangles); raise MFILL_CAP");

  // Variables: c+ then c-, minimize w.(c+ + c-), d2(c+ - c-) = z.
  std::vector<std::vector<Rat>> A(E, std::vector<Rat>(2 * T, Rat(0)));
  for (std::size_t t = 0; t < T; ++t)
    for (const auto& [e, s] : k.triangle_edges(t)) {
      A[e][t] += s;
      A[e][T + t] -= s;
    }
  std::vector<Rat> b(E, Rat(0));
  for (const auto& [e, c] : z.coeffs) b[e] = c;
  std::vector<Rat> cost(2 * T);
  for (std::size_t t = 0; t < T; ++t) cost[t] = cost[T + t] = k.weights()[t];

  SimplexResult lp = simplex_solve(A, b, cost);
  if (!lp.feasible) throw InfeasibleError("cycle is not a boundary in this complex");

  FillResult res;
  res.filling.dim = 2;
  for (std::size_t t = 0; t < T; ++t) {
    Rat v = lp.x[t] - lp.x[T + t];
    if (v != 0) res.filling.coeffs.emplace(t, v);
  }
  res.area = lp.objective;
  res.dual = lp.dual;

  if (mode == FillMode::integral && !res.filling.is_integral()) {
    // Desk-scale branch and bound: bound one fractional coefficient and
    // re-solve; the recursion depth is limited.
    struct Node {
      std::vector<std::vector<Rat>> extra_rows;
      std::vector<Rat> extra_rhs;
    };
    Rat best_area(-1);
    Chain best_chain;
    std::deque<Node> stack = {{{}, {}}};
    int expansions = 0;
    while (!stack.empty()) {
      Node node = stack.back();
      stack.pop_back();
      if (++expansions > 200)
        throw CapError("integral filling branch-and-bound budget exceeded");
      // Assemble LP with extra inequality rows (slack variables appended).
      std::size_t extra = node.extra_rows.size();
      std::vector<std::vector<Rat>> A2(E + extra,
                                       std::vector<Rat>(2 * T + extra, Rat(0)));
      std::vector<Rat> b2(E + extra);
      for (std::size_t e = 0; e < E; ++e) {
        for (std::size_t j = 0; j < 2 * T; ++j) A2[e][j] = A[e][j];
        b2[e] = b[e];
      }
      for (std::size_t r = 0; r < extra; ++r) {
        for (std::size_t j = 0; j < 2 * T; ++j) A2[E + r][j] = node.extra_rows[r][j];
        A2[E + r][2 * T + r] = 1;  // slack
        b2[E + r] = node.extra_rhs[r];
      }
      std::vector<Rat> cost2(2 * T + extra, Rat(0));
      for (std::size_t j = 0; j < 2 * T; ++j) cost2[j] = cost[j];
      SimplexResult sub = simplex_solve(A2, b2, cost2);
      if (!sub.feasible) continue;
      if (best_area >= 0 && sub.objective >= best_area) continue;
      // Find a fractional c_t.
      std::size_t frac = 2 * T;
      Chain cand;
      cand.dim = 2;
      for (std::size_t t = 0; t < T; ++t) {
        Rat v = sub.x[t] - sub.x[T + t];
        if (v != 0) cand.coeffs.emplace(t, v);
        if (boost::multiprecision::denominator(v) != 1 && frac == 2 * T) frac = t;
      }
      if (frac == 2 * T) {
        best_area = sub.objective;
        best_chain = cand;
        continue;
      }
      Rat v = sub.x[frac] - sub.x[T + frac];
      BigInt num = boost::multiprecision::numerator(v);
      BigInt den = boost::multiprecision::denominator(v);
      BigInt fl;
      if (num >= 0)
        fl = num / den;
      else
        fl = -((-num + den - 1) / den);
      // c_t <= floor(v):  c+ - c- <= fl
      Node left = node;
      std::vector<Rat> row(2 * T, Rat(0));
      row[frac] = 1;
      row[T + frac] = -1;
      left.extra_rows.push_back(row);
      left.extra_rhs.push_back(Rat(fl));
      // c_t >= ceil(v): -c+ + c- <= -(fl+1)
      Node right = node;
      for (auto& x : row) x = -x;
      right.extra_rows.push_back(row);
      right.extra_rhs.push_back(Rat(-(fl + 1)));
      stack.push_back(std::move(left));
      stack.push_back(std::move(right));
    }
    if (best_area < 0) throw InfeasibleError("no integral filling found");
    res.area = best_area;
    res.filling = best_chain;
    res.dual.clear();  // the LP dual certifies the relaxation, not the integer optimum
  }
  return res;
}

}  // namespace

FillResult min_filling_area(const SimplicialComplex2& k, const Chain& z, FillMode mode,
                            std::size_t simplex_cap) {
  check_cycle_input(k, z);
  if (mode == FillMode::integral && !z.is_integral())
    throw ValidationError("integral mode requires an integral cycle");

  if (k.is_surface_like()) {
    try {
      SurfaceFill sf(k, z, mode == FillMode::integral);
      FillResult res = sf.run();
      // Feasibility of the certificate, re-verified exactly.
      Chain back = k.boundary(res.filling);
      Chain target = z;
      for (const auto& [e, c] : back.coeffs) target.add(e, -c);
      if (!target.coeffs.empty()) throw Error("filling certificate broken (internal)");
      return res;
    } catch (const NeedsGeneralPath&) {
      // fall through to the simplex
    }
  }
  return general_fill(k, z, mode, simplex_cap);
}

FillResult min_filling_area_dense(const SimplicialComplex2& k, const Chain& z,
                                  FillMode mode, std::size_t simplex_cap) {
  check_cycle_input(k, z);
  if (mode == FillMode::integral && !z.is_integral())
    throw ValidationError("integral mode requires an integral cycle");
  return general_fill(k, z, mode, simplex_cap);
}

bool chain_is_boundary(const SimplicialComplex2& k, const Chain& z,
                       const std::vector<std::size_t>& allowed_triangles) {
  Reducer red;
  for (std::size_t t : allowed_triangles) red.add(triangle_col(k, t));
  SparseCol col = chain_to_col(z);
  return red.reduce(col);
}

std::size_t boundary2_rank(const SimplicialComplex2& k) {
  Reducer red;
  for (std::size_t t = 0; t < k.triangles().size(); ++t) red.add(triangle_col(k, t));
  return red.rank();
}

Rat filling_radius(const SimplicialComplex2& k, const Chain& z) {
  check_cycle_input(k, z);
  if (!k.has_vertex_metric())
    throw ValidationError("filling radius needs a vertex metric");
  if (z.coeffs.empty()) return 0;

  // Support vertices of z.
  std::vector<char> in_spt(k.vertex_count(), 0);
  for (const auto& [e, c] : z.coeffs) {
    in_spt[k.edges()[e].first] = 1;
    in_spt[k.edges()[e].second] = 1;
  }
  const auto& d = k.vertex_metric();
  std::vector<Rat> dist(k.vertex_count());
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    Rat best(-1);
    for (std::size_t s = 0; s < k.vertex_count(); ++s)
      if (in_spt[s] && (best < 0 || d[v][s] < best)) best = d[v][s];
    dist[v] = best;
  }

  std::vector<Rat> candidates = dist;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Incremental feasibility scan over growing vertex neighborhoods.
  Reducer red;
  std::vector<char> added(k.triangles().size(), 0);
  for (const Rat& r : candidates) {
    for (std::size_t t = 0; t < k.triangles().size(); ++t) {
      if (added[t]) continue;
      const auto& tri = k.triangles()[t];
      if (dist[tri[0]] <= r && dist[tri[1]] <= r && dist[tri[2]] <= r) {
        red.add(triangle_col(k, t));
        added[t] = 1;
      }
    }
    SparseCol col = chain_to_col(z);
    if (red.reduce(col)) return r;
  }
  throw InfeasibleError("cycle bounds nowhere in this complex (unfillable)");
}

}  // namespace mfill
