#include <doctest.h>

#include "test_support.hpp"
#include "umbral/errors.hpp"
#include "umbral/rational.hpp"

using namespace umbral;

TEST_CASE("rational literals parse to canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("12")) == "12");
  CHECK(to_string(parse_rational(" +5/10 ")) == "1/2");
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "1/0", "1/-2", "abc", "1.5", "1/", "/3", "1//2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("rational strings round-trip") {
  for (int i = 0; i < 200; ++i) {
    const Rational q = testing::random_rational() * testing::random_rational() + testing::random_rational();
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("rational lists") {
  const auto v = parse_rational_list("1,1/2,-3");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == Rational(1, 2));
  CHECK(v[2] == -3);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-1), 3) == -1);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}
