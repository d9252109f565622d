#include "sakai/error.hpp"
#include "sakai/numeric.hpp"

#include <doctest.h>

using namespace sakai;

TEST_CASE("decimal strings parse exactly") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(-227, 209)) == "-227/209");
  CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("precision scope restores the default") {
  unsigned before = Real::default_precision();
  {
    PrecisionScope scope(80);
    CHECK(Real::default_precision() == 80);
  }
  CHECK(Real::default_precision() == before);
}
