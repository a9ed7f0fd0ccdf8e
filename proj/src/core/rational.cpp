#include "rational.hpp"

#include <cctype>
#include <ostream>

namespace extalg {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw DomainError("division by zero: inverse of 0");
  }
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(inv));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) {
    throw DomainError("division by zero");
  }
  return Rational(mpq_class(value_ / o.value_));
}

std::optional<Rational> Rational::parse(std::string_view text) {
  size_t pos = 0;
  auto scan_integer = [&](bool allow_sign) -> std::optional<std::string> {
    std::string out;
    if (pos < text.size() && allow_sign && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') out.push_back('-');
      ++pos;
    }
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    return out;
  };

  auto num = scan_integer(true);
  if (!num) return std::nullopt;
  mpz_class n(*num, 10);
  mpz_class d(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    auto den = scan_integer(false);
    if (!den) return std::nullopt;
    d = mpz_class(*den, 10);
    if (sgn(d) == 0) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_raw(mpq_class v) {
  v.canonicalize();
  return Rational(std::move(v));
}

Rational inverse_factorial(int m) {
  if (m < 0) {
    throw DomainError("inverse_factorial of negative argument");
  }
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational::from_raw(mpq_class(1, f));
}

Rational factorial(int m) {
  if (m < 0) {
    throw DomainError("factorial of negative argument");
  }
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational::from_raw(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace extalg
