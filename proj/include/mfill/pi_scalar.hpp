#pragma once

#include <string>

#include "mfill/errors.hpp"
#include "mfill/rational.hpp"

namespace mfill {

/// Certified rational enclosure of pi (50 correct digits).
const Rat& pi_lower();
const Rat& pi_upper();

/// Exact scalar of the form coeff * pi^exponent with rational coeff.
///
/// Closed under multiplication and division; addition is defined only for
/// matching exponents. Comparisons against other PiScalars are certified
/// through the pi enclosure and are exact whenever the exponents agree.
struct PiScalar {
  Rat coeff{0};
  int pi_exp = 0;

  PiScalar() = default;
  PiScalar(Rat c, int e = 0) : coeff(std::move(c)), pi_exp(e) {
    if (coeff == 0) pi_exp = 0;
  }

  bool is_rational() const { return pi_exp == 0 || coeff == 0; }
  double to_double() const;

  PiScalar operator*(const PiScalar& o) const {
    return PiScalar(coeff * o.coeff, pi_exp + o.pi_exp);
  }
  PiScalar operator/(const PiScalar& o) const {
    if (o.coeff == 0) throw ValidationError("division by zero scalar");
    return PiScalar(coeff / o.coeff, pi_exp - o.pi_exp);
  }
  PiScalar operator+(const PiScalar& o) const {
    if (coeff == 0) return o;
    if (o.coeff == 0) return *this;
    if (pi_exp != o.pi_exp)
      throw ValidationError("adding scalars with different pi exponents");
    return PiScalar(coeff + o.coeff, pi_exp);
  }
  PiScalar operator-(const PiScalar& o) const {
    return *this + PiScalar(-o.coeff, o.pi_exp);
  }
};

/// Three-way comparison, certified: -1, 0, +1 for a < b, a == b, a > b.
/// Equality is decidable because pi is irrational: scalars with different
/// exponents and nonzero coefficients are never equal.
int pi_cmp(const PiScalar& a, const PiScalar& b);

inline bool pi_le(const PiScalar& a, const PiScalar& b) { return pi_cmp(a, b) <= 0; }
inline bool pi_eq(const PiScalar& a, const PiScalar& b) { return pi_cmp(a, b) == 0; }

std::string pi_scalar_to_string(const PiScalar& s);

}  // namespace mfill
