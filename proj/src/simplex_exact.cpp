#include "mfill/simplex_exact.hpp"

#include "mfill/errors.hpp"

namespace mfill {

namespace {

// Tableau with rows 0..m-1 (constraints) and a cost row; columns
// 0..n-1 structural, n..n+m-1 artificial, last column rhs.
struct Tableau {
  std::size_t m, n;
  std::vector<std::vector<Rat>> t;  // (m+1) x (n+m+1)
  std::vector<std::size_t> basis;   // basic column per row

  Tableau(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b)
      : m(A.size()), n(A.empty() ? 0 : A[0].size()) {
    t.assign(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
    basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      bool neg = b[i] < 0;
      for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? Rat(-A[i][j]) : A[i][j];
      t[i][n + i] = 1;
      t[i][n + m] = neg ? Rat(-b[i]) : b[i];
      basis[i] = n + i;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rat piv = t[row][col];
    for (auto& v : t[row]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule: smallest eligible entering column, smallest basic index
  // on ratio ties. `allowed` masks columns that may enter.
  bool iterate(const std::vector<char>& allowed) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (allowed[j] && t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) return false;
    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw Error("simplex: unbounded problem");
    pivot(leave, enter);
    return true;
  }

  void set_costs(const std::vector<Rat>& c) {
    for (std::size_t j = 0; j <= n + m; ++j) t[m][j] = 0;
    for (std::size_t j = 0; j < c.size(); ++j) t[m][j] = c[j];
    // Price out the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (t[m][basis[i]] == 0) continue;
      Rat f = t[m][basis[i]];
      for (std::size_t j = 0; j <= n + m; ++j) t[m][j] -= f * t[i][j];
    }
  }
};

}  // namespace

SimplexResult simplex_solve(const std::vector<std::vector<Rat>>& A,
                            const std::vector<Rat>& b, const std::vector<Rat>& c) {
  SimplexResult res;
  Tableau tab(A, b);
  const std::size_t m = tab.m, n = tab.n;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rat> phase1(n + m, Rat(0));
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
  tab.set_costs(phase1);
  std::vector<char> allowed(n + m, 1);
  while (tab.iterate(allowed)) {
  }
  if (tab.t[m][n + m] != 0) {
    // Residual objective is -sum of artificials; nonzero means infeasible.
    res.feasible = false;
    return res;
  }

  // Phase 2: artificials may stay basic at zero but must not enter.
  std::vector<Rat> phase2(n + m, Rat(0));
  for (std::size_t j = 0; j < n && j < c.size(); ++j) phase2[j] = c[j];
  tab.set_costs(phase2);
  for (std::size_t j = n; j < n + m; ++j) allowed[j] = 0;
  while (tab.iterate(allowed)) {
  }

  res.feasible = true;
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][n + m];
  res.objective = 0;
  for (std::size_t j = 0; j < n; ++j) res.objective += phase2[j] * res.x[j];
  // Duals from the artificial columns' reduced costs: rc_j = 0 - y_j.
  res.dual.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) res.dual[i] = -tab.t[m][n + i];
  // Rows whose rhs was negated flip the multiplier sign.
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) res.dual[i] = -res.dual[i];
  return res;
}

}  // namespace mfill
