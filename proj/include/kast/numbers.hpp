#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kast {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// An element of the additive circle group Q/Z, stored as num/den with
// 0 <= num < den and gcd(num, den) = 1.
class Angle {
 public:
  Angle() = default;
  Angle(std::int64_t num, std::int64_t den);

  static Angle half() { return Angle(1, 2); }
  static Angle quarter(int k) { return Angle(k, 4); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Angle operator-() const { return Angle(-num_, den_); }
  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }
  Angle& operator+=(const Angle& o) { return *this = *this + o; }
  Angle& operator-=(const Angle& o) { return *this = *this - o; }
  friend Angle operator*(std::int64_t k, const Angle& a);
  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Angle& a);
// Accepts "p/q" or an integer.
Angle parse_angle(std::string_view text);

// A value in (Q/Z) + Z: a rotation together with an exponent of the formal
// unit q.
struct Label {
  Angle rot;
  std::int64_t qexp = 0;

  Label operator-() const { return {-rot, -qexp}; }
  friend Label operator+(const Label& a, const Label& b) { return {a.rot + b.rot, a.qexp + b.qexp}; }
  friend Label operator-(const Label& a, const Label& b) { return a + (-b); }
  Label& operator+=(const Label& o) { return *this = *this + o; }
  friend Label operator*(std::int64_t k, const Label& a) { return {k * a.rot, k * a.qexp}; }
  friend bool operator==(const Label&, const Label&) = default;
};

std::ostream& operator<<(std::ostream& os, const Angle& a);
std::ostream& operator<<(std::ostream& os, const Label& l);

}  // namespace kast
