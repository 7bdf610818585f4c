#include <doctest.h>

#include "mfill/pi_scalar.hpp"
#include "mfill/rational.hpp"

using namespace mfill;

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3") == Rat(3));
  CHECK(rat_from_string("-7/12") == Rat(-7, 12));
  CHECK(rat_from_string("1.25") == Rat(5, 4));
  CHECK(rat_from_string("-0.5") == Rat(-1, 2));
  CHECK(rat_from_string("2e3") == Rat(2000));
  CHECK(rat_from_string("25e-2") == Rat(1, 4));
  CHECK_THROWS(rat_from_string("abc"));
  CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("decimal rendering") {
  CHECK(rat_to_decimal(Rat(5, 4)) == "1.25");
  CHECK(rat_to_decimal(Rat(-5, 4)) == "-1.25");
  CHECK(rat_to_decimal(Rat(0)) == "0");
  CHECK(rat_to_decimal(Rat(1, 3), 5) == "0.33333");
  CHECK(rat_to_decimal(Rat(2, 3), 5) == "0.66667");
  CHECK(rat_to_decimal(Rat(8)) == "8");
  // Round trip through the parser.
  Rat q(987654321, 1024);
  CHECK(rat_from_string(rat_to_decimal(q, 30)) == q);
}

TEST_CASE("rat_from_double is exact for representable values") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(3.0) == Rat(3));
  CHECK(rat_to_double(rat_from_double(0.1)) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("pi scalar comparisons are certified") {
  PiScalar quarter_pi(Rat(1, 4), 1);        // pi/4
  PiScalar inv_4pi(Rat(1, 4), -1);          // 1/(4 pi)
  PiScalar eighth(Rat(1, 8));               // 1/8
  CHECK(pi_cmp(eighth, inv_4pi) > 0);       // 0.125 > 0.0796
  CHECK(pi_cmp(inv_4pi, eighth) < 0);
  CHECK(pi_cmp(quarter_pi, eighth) > 0);
  CHECK(pi_cmp(inv_4pi, inv_4pi) == 0);
  CHECK(pi_eq(PiScalar(Rat(0)), PiScalar(Rat(0), 2)));
  // Multiplication and division move exponents.
  PiScalar prod = quarter_pi * inv_4pi;  // 1/16
  CHECK(prod.is_rational());
  CHECK(prod.coeff == Rat(1, 16));
  CHECK(pi_cmp(PiScalar(Rat(22, 7)), PiScalar(Rat(1), 1)) > 0);   // 22/7 > pi
  CHECK(pi_cmp(PiScalar(Rat(355, 113)), PiScalar(Rat(1), 1)) > 0);  // 355/113 > pi
  CHECK(pi_cmp(PiScalar(Rat(3)), PiScalar(Rat(1), 1)) < 0);
}

TEST_CASE("pi scalar addition requires matching exponents") {
  PiScalar a(Rat(1, 4), -1), b(Rat(1, 2), -1);
  CHECK((a + b).coeff == Rat(3, 4));
  CHECK_THROWS(a + PiScalar(Rat(1), 1));
}
