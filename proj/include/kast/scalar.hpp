#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kast/numbers.hpp"

namespace kast {

// a + b i with unbounded integer parts.
struct GaussInt {
  Integer re = 0;
  Integer im = 0;

  GaussInt() = default;
  GaussInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }
  GaussInt operator-() const { return {-re, -im}; }
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

std::string to_string(const GaussInt& z);

// Laurent polynomial in q with Gaussian-integer coefficients. Terms are kept
// sorted by exponent with no zero coefficients, so equality is structural.
// Conjugation maps i to -i and q to 1/q.
class GaussLaurent {
 public:
  struct Term {
    std::int64_t exp;
    GaussInt coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  GaussLaurent() = default;
  GaussLaurent(int c) : GaussLaurent(GaussInt(c)) {}
  GaussLaurent(const Integer& c) : GaussLaurent(GaussInt(c)) {}
  GaussLaurent(GaussInt c, std::int64_t exp = 0);

  static GaussLaurent monomial(GaussInt c, std::int64_t exp) { return {std::move(c), exp}; }
  // From unsorted terms; merges duplicates and drops zeros.
  static GaussLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of q^exp.
  GaussInt coefficient(std::int64_t exp) const;
  // Set when the value is a constant with zero imaginary part.
  std::optional<Integer> as_integer() const;
  // Substitute q -> 1.
  GaussInt at_q_one() const;
  std::complex<double> evaluate(std::complex<double> q) const;

  GaussLaurent conj() const;
  GaussLaurent operator-() const;
  friend GaussLaurent operator+(const GaussLaurent& a, const GaussLaurent& b);
  friend GaussLaurent operator-(const GaussLaurent& a, const GaussLaurent& b);
  friend GaussLaurent operator*(const GaussLaurent& a, const GaussLaurent& b);
  GaussLaurent& operator+=(const GaussLaurent& o) { return *this = *this + o; }
  GaussLaurent& operator-=(const GaussLaurent& o) { return *this = *this - o; }
  GaussLaurent& operator*=(const GaussLaurent& o) { return *this = *this * o; }
  friend bool operator==(const GaussLaurent&, const GaussLaurent&) = default;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const GaussLaurent& x);

using Complex = std::complex<double>;

// Uniform interface to the scalar rings used by the generic algorithms.
template <class S>
struct Ring;

template <>
struct Ring<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static Integer conj(const Integer& x) { return x; }
  static bool is_zero(const Integer& x) { return x == 0; }
};

template <>
struct Ring<GaussInt> {
  static GaussInt zero() { return {}; }
  static GaussInt one() { return {1}; }
  static GaussInt conj(const GaussInt& x) { return x.conj(); }
  static bool is_zero(const GaussInt& x) { return x.is_zero(); }
};

template <>
struct Ring<GaussLaurent> {
  static GaussLaurent zero() { return {}; }
  static GaussLaurent one() { return {1}; }
  static GaussLaurent conj(const GaussLaurent& x) { return x.conj(); }
  static bool is_zero(const GaussLaurent& x) { return x.is_zero(); }
};

template <>
struct Ring<Complex> {
  static Complex zero() { return {}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  // Exact test; tolerance-based decisions live with the callers.
  static bool is_zero(const Complex& x) { return x == Complex{}; }
};

// exp(2 pi i rot) * q^qexp in the exact ring. Only rotations with denominator
// 1, 2 or 4 are representable; anything else throws RepresentabilityError.
GaussLaurent eta_exact(const Label& value);

// exp(2 pi i rot) * q^qexp with q specialized to the unit complex number `q`.
Complex eta_float(const Label& value, Complex q = {1.0, 0.0});

}  // namespace kast
