#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mfill/rng.hpp"

namespace mfill {

/// Seidel's randomized incremental LP for dimension <= 3 over a box.
///
/// Minimizes obj . x subject to box_lo <= x <= box_hi and rows a . x <= b,
/// each row stored as [a_0 .. a_{d-1}, b]. The box keeps every subproblem
/// bounded, which is what makes the incremental invariant sound. Works for
/// T = double (pass a small eps) and for exact T = Rat (eps = 0). Returns
/// nullopt when infeasible.
template <typename T>
class SeidelLp {
 public:
  SeidelLp(T eps, std::uint64_t shuffle_seed) : eps_(eps), rng_(shuffle_seed) {}

  std::optional<std::vector<T>> solve(int dim, const std::vector<T>& box_lo,
                                      const std::vector<T>& box_hi,
                                      std::vector<std::vector<T>> rows,
                                      const std::vector<T>& objective) {
    for (std::size_t i = rows.size(); i > 1; --i) {
      std::size_t j = rng_.next_below(i);
      std::swap(rows[i - 1], rows[j]);
    }
    return solve_rec(dim, box_lo, box_hi, rows, objective);
  }

 private:
  std::optional<std::vector<T>> solve_rec(int d, const std::vector<T>& lo,
                                          const std::vector<T>& hi,
                                          const std::vector<std::vector<T>>& rows,
                                          const std::vector<T>& obj) {
    for (int k = 0; k < d; ++k)
      if (lo[static_cast<std::size_t>(k)] > hi[static_cast<std::size_t>(k)] + eps_)
        return std::nullopt;
    if (d == 1) return solve_1d(lo[0], hi[0], rows, obj);

    // Box-vertex optimum; the invariant below keeps x optimal for the box
    // plus every row processed so far.
    std::vector<T> x(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
      x[static_cast<std::size_t>(k)] =
          obj[static_cast<std::size_t>(k)] > T(0) ? lo[static_cast<std::size_t>(k)]
                                                  : hi[static_cast<std::size_t>(k)];

    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::vector<T>& row = rows[i];
      T lhs = T(0);
      for (int k = 0; k < d; ++k)
        lhs += row[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
      if (lhs <= row[static_cast<std::size_t>(d)] + eps_) continue;

      // Optimum of the prefix lies on this hyperplane.
      int piv = 0;
      T best = abs_of(row[0]);
      for (int k = 1; k < d; ++k) {
        T a = abs_of(row[static_cast<std::size_t>(k)]);
        if (a > best) {
          best = a;
          piv = k;
        }
      }
      if (!(best > eps_)) return std::nullopt;  // "0 <= b" with b < 0
      T apiv = row[static_cast<std::size_t>(piv)];

      auto substitute = [&](const std::vector<T>& g) {
        std::vector<T> out;
        out.reserve(static_cast<std::size_t>(d));
        const T& gj = g[static_cast<std::size_t>(piv)];
        for (int k = 0; k < d; ++k) {
          if (k == piv) continue;
          out.push_back(g[static_cast<std::size_t>(k)] -
                        gj * row[static_cast<std::size_t>(k)] / apiv);
        }
        out.push_back(g[static_cast<std::size_t>(d)] - gj * row[static_cast<std::size_t>(d)] / apiv);
        return out;
      };

      std::vector<std::vector<T>> reduced;
      reduced.reserve(i + 2);
      {
        // The eliminated variable's box bounds become two general rows.
        std::vector<T> up(static_cast<std::size_t>(d + 1), T(0));
        up[static_cast<std::size_t>(piv)] = T(1);
        up[static_cast<std::size_t>(d)] = hi[static_cast<std::size_t>(piv)];
        std::vector<T> dn(static_cast<std::size_t>(d + 1), T(0));
        dn[static_cast<std::size_t>(piv)] = T(-1);
        dn[static_cast<std::size_t>(d)] = -lo[static_cast<std::size_t>(piv)];
        reduced.push_back(substitute(up));
        reduced.push_back(substitute(dn));
      }
      for (std::size_t k = 0; k < i; ++k) reduced.push_back(substitute(rows[k]));

      std::vector<T> rlo, rhi, robj;
      for (int k = 0; k < d; ++k) {
        if (k == piv) continue;
        rlo.push_back(lo[static_cast<std::size_t>(k)]);
        rhi.push_back(hi[static_cast<std::size_t>(k)]);
        robj.push_back(obj[static_cast<std::size_t>(k)] -
                       obj[static_cast<std::size_t>(piv)] * row[static_cast<std::size_t>(k)] / apiv);
      }

      auto sub = solve_rec(d - 1, rlo, rhi, reduced, robj);
      if (!sub) return std::nullopt;

      std::vector<T> nx(static_cast<std::size_t>(d));
      int si = 0;
      for (int k = 0; k < d; ++k) {
        if (k == piv) continue;
        nx[static_cast<std::size_t>(k)] = (*sub)[static_cast<std::size_t>(si++)];
      }
      T acc = row[static_cast<std::size_t>(d)];
      for (int k = 0; k < d; ++k) {
        if (k == piv) continue;
        acc -= row[static_cast<std::size_t>(k)] * nx[static_cast<std::size_t>(k)];
      }
      nx[static_cast<std::size_t>(piv)] = acc / apiv;
      x = std::move(nx);
    }
    return x;
  }

  std::optional<std::vector<T>> solve_1d(T lo, T hi,
                                         const std::vector<std::vector<T>>& rows,
                                         const std::vector<T>& obj) {
    for (const auto& row : rows) {
      const T& a = row[0];
      const T& b = row[1];
      if (a > eps_) {
        T v = b / a;
        if (v < hi) hi = v;
      } else if (a < -eps_) {
        T v = b / a;
        if (v > lo) lo = v;
      } else if (b < -eps_) {
        return std::nullopt;
      }
    }
    if (lo > hi + eps_) return std::nullopt;
    return std::vector<T>{obj[0] > T(0) ? lo : hi};
  }

  static T abs_of(const T& v) { return v < T(0) ? T(-v) : v; }

  T eps_;
  Rng rng_;
};

}  // namespace mfill
