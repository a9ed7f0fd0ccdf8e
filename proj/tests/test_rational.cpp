#include "doctest.h"
#include "rational.hpp"
#include "rng.hpp"

using extalg::Rational;

namespace {

Rational rat(const char* text) {
  auto r = Rational::parse(text);
  REQUIRE(r.has_value());
  return *r;
}

bool canonical(const Rational& r) {
  const mpq_class& q = r.raw();
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

}  // namespace

TEST_CASE("rational arithmetic examples") {
  CHECK((rat("1/2") + rat("1/3")).str() == "5/6");
  CHECK((rat("2/3") * rat("3/2")).str() == "1");
  CHECK(rat("-2/5").inverse().str() == "-5/2");
  CHECK((-rat("3/4")).str() == "-3/4");
  CHECK((rat("1/2") - rat("1/2")).str() == "0");
}

TEST_CASE("inverse factorial") {
  CHECK(extalg::inverse_factorial(0).str() == "1");
  CHECK(extalg::inverse_factorial(3).str() == "1/6");
  CHECK(extalg::inverse_factorial(5).str() == "1/120");
  CHECK(extalg::factorial(4).str() == "24");
}

TEST_CASE("parse accepts the p/q text form only") {
  CHECK(rat("7").str() == "7");
  CHECK(rat("+7").str() == "7");
  CHECK(rat("-6/4").str() == "-3/2");
  CHECK(rat("007/002").str() == "7/2");
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("1/-2").has_value());
  CHECK_FALSE(Rational::parse("1.5").has_value());
  CHECK_FALSE(Rational::parse(" 1").has_value());
  CHECK_FALSE(Rational::parse("1/").has_value());
  CHECK_FALSE(Rational::parse("a").has_value());
  CHECK_FALSE(Rational::parse("1/2/3").has_value());
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(Rational(0).inverse(), extalg::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), extalg::DomainError);
  CHECK_THROWS_AS(Rational(1, 0), extalg::DomainError);
}

TEST_CASE("field axioms on random exact values") {
  extalg::SplitMix64 g(0xfeedfaceULL);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational a(g.range(-1000000, 1000000), g.range(1, 1000000));
    Rational b(g.range(-1000000, 1000000), g.range(1, 1000000));
    Rational c(g.range(-1000000, 1000000), g.range(1, 1000000));

    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));

    CHECK(canonical(a + b));
    CHECK(canonical(a * b));
    CHECK(canonical(-a));
    if (!b.is_zero()) CHECK(canonical(a / b));
  }
}

TEST_CASE("round trip through the text form") {
  extalg::SplitMix64 g(42);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(g.range(-100000, 100000), g.range(1, 100000));
    auto back = Rational::parse(a.str());
    REQUIRE(back.has_value());
    CHECK(*back == a);
    CHECK(back->str() == a.str());
  }
}
