#include "superformat/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace superformat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(s)));
  }
  const mpz_class num = parse_integer(s.substr(0, slash));
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("denominator must be unsigned: '" + std::string(s) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(s) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace superformat
