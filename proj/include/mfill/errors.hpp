#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mfill {

/// Size caps honor the MFILL_CAP environment variable when set.
inline std::size_t env_size_cap(std::size_t fallback) {
  if (const char* env = std::getenv("MFILL_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input data (broken invariants, malformed files, bad parameters).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

/// A cycle admits no filling in the given complex (homology obstruction).
/// Distinct from ValidationError: the input is well-formed, the problem
/// is infeasible.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An enclosure (certified interval) could not be tightened to the
/// requested resolution within the iteration budget.
class EnclosureError : public Error {
 public:
  using Error::Error;
};

}  // namespace mfill
