#pragma once

#include <vector>

#include "mfill/rational.hpp"

namespace mfill {

/// Dense exact-rational two-phase simplex (Bland's rule, always terminates).
/// Standard form: minimize c.x subject to A x = b, x >= 0.
struct SimplexResult {
  bool feasible = false;
  Rat objective;
  std::vector<Rat> x;
  std::vector<Rat> dual;  // one multiplier per equality row
};

SimplexResult simplex_solve(const std::vector<std::vector<Rat>>& A,
                            const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace mfill
