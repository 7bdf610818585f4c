#pragma once

#include <string>
#include <vector>

#include "mfill/metric_space.hpp"

namespace mfill {

/// Finite group presentation. Generators are distinct lowercase letters;
/// relator words use the matching uppercase letter for a formal inverse
/// and must be freely reduced.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;

  void validate() const;
};

/// Ball of the Cayley graph up to the given word-length radius.
///
/// Elements are identified by a breadth-first relator closure (truncated
/// coset enumeration) run on a padded ball of radius radius + max relator
/// length; vertices are labeled by shortlex normal forms ("e" for the
/// identity) and listed in shortlex order. Edges are the generator moves
/// staying inside the ball.
Graph cayley_ball(const GroupPresentation& p, int radius, std::size_t state_cap = 200000);

}  // namespace mfill
