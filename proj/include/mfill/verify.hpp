#pragma once

#include "mfill/report.hpp"

namespace mfill {

struct VerifyOptions {
  std::string suite = "all";  // "constants" (experiments 1-7) or "all"
  std::uint64_t seed = 7;
  double tolerance_scale = 1.0;
  int sweep_count = 200;
};

/// Runs the verification matrix and returns the (deterministic) report.
/// Items are grouped per named check; timing is deliberately not part of
/// the report payload.
Report run_verify(const VerifyOptions& opts);

/// Individual checks, exposed for the acceptance suite (which times them
/// separately). Each appends its items to the report.
void verify_golab(Report& rep, const VerifyOptions& opts);                  // 1
void verify_jung_alpha(Report& rep, const VerifyOptions& opts);             // 2
void verify_density_inequalities(Report& rep, const VerifyOptions& opts);   // 3
void verify_isoperimetrix(Report& rep, const VerifyOptions& opts);          // 4
void verify_katz(Report& rep, const VerifyOptions& opts);                   // 5
void verify_profile(Report& rep, const VerifyOptions& opts);                // 6
void verify_hlambda(Report& rep, const VerifyOptions& opts);                // 7
void verify_hyperbolicity(Report& rep, const VerifyOptions& opts);          // 8
void verify_structural(Report& rep, const VerifyOptions& opts);             // 9
void verify_determinism(Report& rep, const VerifyOptions& opts);            // 10

}  // namespace mfill
