#include <doctest.h>

#include "platform_market/errors.hpp"
#include "platform_market/rational.hpp"

using namespace pmkt;

TEST_CASE("decimal literals parse exactly") {
  CHECK(parse_rational("3.05") == rat(61, 20));
  CHECK(parse_rational("1.15") == rat(23, 20));
  CHECK(parse_rational("0.05") == rat(1, 20));
  CHECK(parse_rational("1.1") == rat(11, 10));
  CHECK(parse_rational("10") == rat(10));
  CHECK(parse_rational(".5") == rat(1, 2));
  CHECK(parse_rational("2.") == rat(2));
}

TEST_CASE("fraction strings parse and reduce") {
  CHECK(parse_rational("61/20") == rat(61, 20));
  CHECK(parse_rational("2/4") == rat(1, 2));
  CHECK(parse_rational("-1") == rat(-1));
  CHECK(parse_rational("-3/6") == rat(-1, 2));
  CHECK(parse_rational(" 7/3 ") == rat(7, 3));
}

TEST_CASE("bad strings are rejected") {
  for (const char* s : {"", "abc", "1/0", "1//2", "1.2.3", "1e-3", "--2"}) {
    CHECK_THROWS_AS(parse_rational(s), Error);
  }
}

TEST_CASE("formatting uses p/q only when needed") {
  CHECK(rational_str(rat(5)) == "5");
  CHECK(rational_str(rat(61, 20)) == "61/20");
  CHECK(rational_str(rat(-1, 2)) == "-1/2");
  CHECK(rational_str(rat(0)) == "0");
}

TEST_CASE("string round-trip is exact") {
  for (long n = -12; n <= 12; ++n)
    for (long d = 1; d <= 9; ++d) {
      Rational q = rat(n, d);
      CHECK(parse_rational(rational_str(q)) == q);
    }
}

TEST_CASE("double rationalization recovers small fractions") {
  CHECK(rational_from_double(13.0 / 14.0, 1000000) == rat(13, 14));
  CHECK(rational_from_double(0.75, 1000000) == rat(3, 4));
  CHECK(rational_from_double(0.0, 1000000) == rat(0));
  CHECK(rational_from_double(1.0, 1000000) == rat(1));
}
