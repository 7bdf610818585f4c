#include "mfill/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "mfill/errors.hpp"

namespace mfill {

Rat rat_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty number literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rat(num, den);
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string int_part, frac_part, exp_part;
  std::string* cur = &int_part;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (cur != &int_part) throw ValidationError("malformed number '" + text + "'");
      cur = &frac_part;
    } else if (c == 'e' || c == 'E') {
      exp_part = s.substr(i + 1);
      break;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur->push_back(c);
    } else {
      throw ValidationError("malformed number '" + text + "'");
    }
  }
  if (int_part.empty() && frac_part.empty())
    throw ValidationError("malformed number '" + text + "'");

  BigInt mantissa(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) mantissa = mantissa * 10 + (c - '0');
  long exp10 = exp_part.empty() ? 0 : std::stol(exp_part);
  exp10 -= static_cast<long>(frac_part.size());

  Rat value(mantissa);
  if (exp10 > 0) {
    BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exp10));
    value *= Rat(p);
  } else if (exp10 < 0) {
    BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exp10));
    value /= Rat(p);
  }
  return neg ? Rat(-value) : value;
}

std::string rat_to_decimal(const Rat& q, int sig_digits) {
  if (q == 0) return "0";
  bool neg = q < 0;
  BigInt num = boost::multiprecision::numerator(rat_abs(q));
  BigInt den = boost::multiprecision::denominator(rat_abs(q));

  BigInt ip = num / den;
  BigInt rem = num % den;
  std::string int_str = ip.str();
  int int_digits = (ip == 0) ? 0 : static_cast<int>(int_str.size());
  int frac_budget = sig_digits - int_digits;
  if (frac_budget < 0) frac_budget = 0;

  std::string frac;
  bool exact = (rem == 0);
  if (rem != 0 && frac_budget > 0) {
    // One guard digit for rounding.
    for (int k = 0; k < frac_budget + 1 && rem != 0; ++k) {
      rem *= 10;
      BigInt d = rem / den;
      rem %= den;
      frac.push_back(static_cast<char>('0' + d.template convert_to<int>()));
    }
    exact = (rem == 0) && (static_cast<int>(frac.size()) <= frac_budget);
    if (static_cast<int>(frac.size()) > frac_budget) {
      char guard = frac.back();
      frac.pop_back();
      if (guard >= '5') {
        int k = static_cast<int>(frac.size()) - 1;
        while (k >= 0) {
          if (frac[k] != '9') {
            frac[k]++;
            break;
          }
          frac[k] = '0';
          --k;
        }
        if (k < 0) {
          ip += 1;
          int_str = ip.str();
        }
      }
    }
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  (void)exact;

  std::string out = neg ? "-" : "";
  out += int_str;
  if (!frac.empty()) {
    out += '.';
    out += frac;
  }
  return out;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw ValidationError("non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return rat_from_string(buf);
}

}  // namespace mfill
