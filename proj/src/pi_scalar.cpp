#include "mfill/pi_scalar.hpp"

#include <cmath>

namespace mfill {

namespace {

// 50 digits of pi after the decimal point; the truncation is a strict
// lower bound, adding one ulp of the last digit gives a strict upper bound.
const char* kPiDigits = "314159265358979323846264338327950288419716939937510";

Rat make_pi(bool upper) {
  BigInt num(kPiDigits);
  if (upper) num += 1;
  BigInt den = boost::multiprecision::pow(BigInt(10), 50);
  return Rat(num, den);
}

// Interval [lo, hi] containing pi^e for e possibly negative.
void pi_power_interval(int e, Rat& lo, Rat& hi) {
  if (e == 0) {
    lo = hi = 1;
    return;
  }
  bool inv = e < 0;
  int n = inv ? -e : e;
  Rat plo = 1, phi = 1;
  for (int i = 0; i < n; ++i) {
    plo *= pi_lower();
    phi *= pi_upper();
  }
  if (inv) {
    lo = 1 / phi;
    hi = 1 / plo;
  } else {
    lo = plo;
    hi = phi;
  }
}

}  // namespace

const Rat& pi_lower() {
  static const Rat v = make_pi(false);
  return v;
}

const Rat& pi_upper() {
  static const Rat v = make_pi(true);
  return v;
}

double PiScalar::to_double() const {
  return rat_to_double(coeff) * std::pow(M_PI, pi_exp);
}

int pi_cmp(const PiScalar& a, const PiScalar& b) {
  if (a.pi_exp == b.pi_exp || a.coeff == 0 || b.coeff == 0) {
    // Same power of pi (or one side zero): exact rational comparison.
    Rat pa = a.coeff, pb = b.coeff;
    if (a.coeff != 0 && b.coeff != 0) return pa < pb ? -1 : (pa > pb ? 1 : 0);
    // Compare signs only; pi^e > 0 always.
    int sa = rat_sign(a.coeff), sb = rat_sign(b.coeff);
    return sa < sb ? -1 : (sa > sb ? 1 : 0);
  }
  // a.coeff*pi^i vs b.coeff*pi^j, both nonzero, i != j: never equal.
  Rat alo, ahi, blo, bhi;
  pi_power_interval(a.pi_exp, alo, ahi);
  pi_power_interval(b.pi_exp, blo, bhi);
  auto scale = [](const Rat& c, const Rat& plo, const Rat& phi, Rat& lo, Rat& hi) {
    if (c >= 0) {
      lo = c * plo;
      hi = c * phi;
    } else {
      lo = c * phi;
      hi = c * plo;
    }
  };
  Rat a_lo, a_hi, b_lo, b_hi;
  scale(a.coeff, alo, ahi, a_lo, a_hi);
  scale(b.coeff, blo, bhi, b_lo, b_hi);
  if (a_hi < b_lo) return -1;
  if (a_lo > b_hi) return 1;
  throw Error("pi enclosure too coarse for comparison (values equal to ~50 digits)");
}

std::string pi_scalar_to_string(const PiScalar& s) {
  std::string out = rat_to_decimal(Rat(boost::multiprecision::numerator(s.coeff)), 30);
  out += "/";
  out += rat_to_decimal(Rat(boost::multiprecision::denominator(s.coeff)), 30);
  if (s.pi_exp == 1)
    out += " * pi";
  else if (s.pi_exp == -1)
    out += " / pi";
  else if (s.pi_exp != 0)
    out += " * pi^" + std::to_string(s.pi_exp);
  return out;
}

}  // namespace mfill
