#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mfill {

// Plain-value semantics (no expression templates): every operation returns
// a value of the same type, which keeps std::min/max and generic code
// straightforward. BigInt matches the integer type inside Rat.
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline double rat_to_double(const Rat& q) { return q.template convert_to<double>(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int rat_sign(const Rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

/// Parses "3", "-7/12" or a decimal string like "-1.25" into an exact rational.
Rat rat_from_string(const std::string& text);

/// Renders q as a decimal string with at most `sig_digits` significant digits,
/// exact when the denominator divides a power of ten within that budget.
/// Deterministic (round half away from zero), no exponent notation.
std::string rat_to_decimal(const Rat& q, int sig_digits = 17);

/// Exact decimal rendering of a double (shortest round-trip via %.17g).
Rat rat_from_double(double x);

}  // namespace mfill
