#include "kast/numbers.hpp"

#include <charconv>
#include <numeric>

namespace kast {

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty number");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad number '" + std::string(text) + "'");
  }
  Integer value{std::string(digits)};
  return text.front() == '-' ? Integer(-value) : value;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator in angle");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle operator+(const Angle& a, const Angle& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return Angle(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Angle operator*(std::int64_t k, const Angle& a) {
  return Angle(floor_mod(k, a.den_) * a.num_, a.den_);
}

std::string to_string(const Angle& a) {
  return std::to_string(a.num()) + "/" + std::to_string(a.den());
}

Angle parse_angle(std::string_view text) {
  const Rational r = parse_rational(text);
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  // Reduce mod 1 before narrowing so large integer parts are harmless.
  const Integer reduced = ((num % den) + den) % den;
  if (den > Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw std::invalid_argument("angle denominator too large");
  }
  return Angle(reduced.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, const Label& l) {
  return os << "(" << l.rot << ", q^" << l.qexp << ")";
}

}  // namespace kast
