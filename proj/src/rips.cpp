#include "mfill/rips.hpp"

#include <algorithm>

#include "mfill/errors.hpp"

namespace mfill {

namespace {

// Feasibility of the loop chain in the flag complex at scale t: triangles
// are the triples with pairwise distance <= t.
bool dies_at(const std::vector<std::vector<Rat>>& d, const Loop& loop, const Rat& t) {
  const std::size_t n = d.size();
  std::vector<std::array<std::size_t, 3>> tris;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (d[a][b] > t) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (d[a][c] <= t && d[b][c] <= t) tris.push_back({a, b, c});
    }
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
    std::size_t u = loop.vertices[i];
    std::size_t v = loop.vertices[(i + 1) % loop.vertices.size()];
    if (d[u][v] > t) return false;  // the cycle itself is not present yet
    extra.push_back({u, v});
  }
  SimplicialComplex2 k(n, std::move(tris), {}, std::move(extra));
  Chain z = k.loop_chain(loop);
  std::vector<std::size_t> all(k.triangles().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return chain_is_boundary(k, z, all);
}

Rat scan_scales(const std::vector<std::vector<Rat>>& d, const Loop& loop) {
  const std::size_t n = d.size();
  if (n < 3) throw ValidationError("need at least 3 points");
  for (std::size_t v : loop.vertices)
    if (v >= n) throw ValidationError("loop vertex out of range");

  std::vector<Rat> scales;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) scales.push_back(d[i][j]);
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());

  // The class must die by the diameter (the full 2-skeleton is simply
  // connected); anything else is an internal error.
  if (!dies_at(d, loop, scales.back()))
    throw Error("loop did not die at diameter scale (internal)");

  std::size_t lo = 0, hi = scales.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (dies_at(d, loop, scales[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return scales[lo] / 2;
}

}  // namespace

Rat rips_filling_radius(const FiniteMetricSpace& m, const Loop& loop) {
  return scan_scales(m.matrix(), loop);
}

Rat kuratowski_filling_radius(const FiniteMetricSpace& m, const Loop& loop) {
  if (m.size() == 0) throw ValidationError("empty space");
  EmbeddedPointSet emb = kuratowski_embed(m, m.labels()[0]);
  // Neighborhood complex scales are the sup-norm circumradii: for boxes the
  // circumradius of a finite set is half its diameter, so cells enter at
  // half the pairwise sup distance computed from the embedded coordinates.
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = emb.sup_distance(i, j);
  return scan_scales(d, loop);
}

}  // namespace mfill
