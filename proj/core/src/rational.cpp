#include "lftreal/rational.hpp"

#include <cctype>
#include <ostream>

#include "lftreal/errors.hpp"

namespace lftreal {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::string_view what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected " + std::string(what));
    return std::string(text.substr(start, pos - start));
  };

  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  Integer num(digits("digit"), 10);
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_at = pos;
    den = Integer(digits("denominator digit"), 10);
    if (den == 0) throw ParseError(den_at, "zero denominator");
  }
  if (pos != text.size()) throw ParseError(pos, "unexpected character in rational");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
  return out;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
  return out;
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace lftreal
