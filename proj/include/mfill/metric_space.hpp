#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfill/rational.hpp"

namespace mfill {

/// Finite metric space: labels plus an exact distance matrix.
/// Construction validates symmetry, zero diagonal, strict positivity off
/// the diagonal and the triangle inequality (integer fast path when all
/// entries are integers).
class FiniteMetricSpace {
 public:
  struct Trusted {};  // tag: skip validation for matrices correct by construction

  FiniteMetricSpace() = default;  // empty space, filled in by move assignment
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> d);
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> d,
                    Trusted);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rat& distance(std::size_t i, std::size_t j) const { return d_[i][j]; }
  const std::vector<std::vector<Rat>>& matrix() const { return d_; }

  Rat diameter() const;
  std::size_t index_of(const std::string& label) const;

  void validate() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rat>> d_;
};

/// Undirected graph with positive rational edge weights; must be connected,
/// no self-loops.
class Graph {
 public:
  struct Edge {
    std::size_t u, v;
    Rat w;
  };

  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<std::pair<std::size_t, Rat>>>& adjacency() const {
    return adj_;
  }

  /// Single-source shortest path distances (exact Dijkstra).
  std::vector<Rat> dijkstra(std::size_t source) const;

  /// Shortest path distances from a set of sources.
  std::vector<Rat> multi_source_distances(const std::vector<std::size_t>& sources) const;

  /// One shortest path between two vertices with deterministic tie
  /// breaking (lexicographically smallest predecessor).
  std::vector<std::size_t> shortest_path(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> adj_;
};

/// All-pairs shortest path metric of a connected graph.
FiniteMetricSpace graph_metric(const Graph& g);

/// Four-point hyperbolicity constant: max over vertex quadruples of
/// (L1 - L2)/4 where L1 >= L2 >= L3 are the three pairing sums
/// d(w,x)+d(y,z), d(w,y)+d(x,z), d(w,z)+d(x,y). Zero exactly on tree
/// metrics; scales linearly with the metric.
Rat four_point_delta(const FiniteMetricSpace& m);

/// Certified lower bound for the slim-triangle constant: max over sampled
/// vertex triples, with explicit shortest-path sides, of the one-sided
/// Hausdorff defect of each side against the union of the other two.
/// Exhaustive when the triple count fits the budget, deterministic
/// sampling (plus degree-extreme seeds) otherwise.
Rat slim_triangle_delta(const Graph& g, std::size_t sample_budget);

/// Isometric embedding into sup-norm coordinates.
struct EmbeddedPointSet {
  std::vector<std::string> labels;
  std::vector<std::vector<Rat>> coords;  // one row per point, n columns

  Rat sup_distance(std::size_t i, std::size_t j) const;
};

/// Kuratowski embedding z -> d(z,.) - d(z0,.); exact isometry onto its image.
EmbeddedPointSet kuratowski_embed(const FiniteMetricSpace& m, const std::string& basepoint);

/// Greedy maximal delta-separated net in input label order: pairwise
/// distances >= delta and every point within < delta of the net.
std::vector<std::size_t> separated_net(const FiniteMetricSpace& m, const Rat& delta);

}  // namespace mfill
