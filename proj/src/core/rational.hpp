#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace extalg {

// Exact rational scalar, always in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1.
//
// Text form is "p/q" with an optional sign on p; a bare "p" means p/1.
// That form is used verbatim in JSON strings and CLI output.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);

  // Strict parser for the "p/q" text form. Accepts non-canonical input
  // ("-6/4", "+03") and canonicalizes; rejects anything else.
  static std::optional<Rational> parse(std::string_view text);

  std::string str() const { return value_.get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }

  // Underlying GMP value; canonical by construction.
  const mpq_class& raw() const { return value_; }

  // Wraps an arbitrary GMP rational, canonicalizing it first.
  static Rational from_raw(mpq_class v);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

// 1/m! as an exact rational.
Rational inverse_factorial(int m);

// m! as an exact rational (the embed/wedge compatibility constants).
Rational factorial(int m);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace extalg
