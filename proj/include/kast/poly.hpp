#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kast/scalar.hpp"

namespace kast {

// Dense row-major matrix over a scalar ring.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Ring<S>::zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Conjugate transpose.
  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = Ring<S>::conj((*this)(i, j));
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (Ring<S>::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!Ring<S>::is_zero(b(k, j))) out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

// M M^dagger.
template <class S>
Matrix<S> gram(const Matrix<S>& m) {
  return m * m.adjoint();
}

// Polynomial in t over S; coefficient k multiplies t^k. The zero polynomial
// has no coefficients; otherwise the leading coefficient is non-zero.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly from_descending(std::vector<S> descending) {
    std::reverse(descending.begin(), descending.end());
    return Poly(std::move(descending));
  }
  // t - root
  static Poly linear(const S& root) { return Poly({-root, Ring<S>::one()}); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<S>& ascending() const { return c_; }
  std::vector<S> descending() const { return {c_.rbegin(), c_.rend()}; }
  S coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Ring<S>::zero(); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1, Ring<S>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> out(std::max(a.c_.size(), b.c_.size()), Ring<S>::zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  template <class F>
  auto map(F f) const {
    using T = decltype(f(std::declval<S>()));
    std::vector<T> out;
    out.reserve(c_.size());
    for (const S& x : c_) out.push_back(f(x));
    return Poly<T>(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && Ring<S>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

// det(tI - M) by Berkowitz's division-free recurrence; valid over any
// commutative ring, O(n^4) ring operations.
template <class S>
Poly<S> charpoly(const Matrix<S>& m) {
  if (!m.square()) throw std::invalid_argument("charpoly needs a square matrix");
  const std::size_t n = m.rows();
  // Descending coefficients of the leading r x r block's characteristic polynomial.
  std::vector<S> c{Ring<S>::one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Partition the leading (r+1) block as [[M, col], [row, a]].
    // Toeplitz column: 1, -a, -row col, -row M col, ..., -row M^(r-1) col.
    std::vector<S> toeplitz{Ring<S>::one(), -m(r, r)};
    std::vector<S> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      S dot = Ring<S>::zero();
      for (std::size_t i = 0; i < r; ++i) {
        if (!Ring<S>::is_zero(v[i]) && !Ring<S>::is_zero(m(r, i))) dot += m(r, i) * v[i];
      }
      toeplitz.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<S> next(r, Ring<S>::zero());
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!Ring<S>::is_zero(v[j]) && !Ring<S>::is_zero(m(i, j))) next[i] += m(i, j) * v[j];
        }
      }
      v = std::move(next);
    }
    std::vector<S> next_c(r + 2, Ring<S>::zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!Ring<S>::is_zero(toeplitz[i - j]) && !Ring<S>::is_zero(c[j])) next_c[i] += toeplitz[i - j] * c[j];
      }
    }
    c = std::move(next_c);
  }
  return Poly<S>::from_descending(std::move(c));
}

// Determinant by the Leibniz permutation expansion. Factorial cost; used as
// an oracle for small matrices.
template <class S>
S det_leibniz(const Matrix<S>& m) {
  if (!m.square()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  S total = Ring<S>::zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    S term = Ring<S>::one();
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      if (Ring<S>::is_zero(m(i, perm[i]))) {
        zero = true;
      } else {
        term = term * m(i, perm[i]);
      }
    }
    if (zero) continue;
    total += (inversions % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det via Berkowitz: (-1)^n times the constant coefficient.
template <class S>
S det(const Matrix<S>& m) {
  const S c0 = charpoly(m).coefficient(0);
  return m.rows() % 2 == 0 ? c0 : -c0;
}

// Sum of det(B) conj(det(B)) over all m x m submatrices B.
template <class S>
S minor_sum(const Matrix<S>& a, std::size_t m) {
  if (m > std::min(a.rows(), a.cols())) throw std::invalid_argument("minor size exceeds matrix");
  std::vector<std::size_t> rows(m), cols(m);
  auto first = [](std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  };
  auto advance = [](std::vector<std::size_t>& v, std::size_t n) {
    const std::size_t k = v.size();
    for (std::size_t i = k; i-- > 0;) {
      if (v[i] < n - k + i) {
        ++v[i];
        for (std::size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  S total = Ring<S>::zero();
  first(rows);
  do {
    first(cols);
    do {
      Matrix<S> b(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) b(i, j) = a(rows[i], cols[j]);
      }
      const S d = det_leibniz(b);
      total += d * Ring<S>::conj(d);
    } while (advance(cols, a.cols()));
  } while (advance(rows, a.rows()));
  return total;
}

// Divides out the largest power of t; exact ring version.
template <class S>
std::pair<Poly<S>, std::size_t> strip_zero_roots(const Poly<S>& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no finite zero-root multiplicity");
  const auto& c = p.ascending();
  std::size_t z = 0;
  while (Ring<S>::is_zero(c[z])) ++z;
  return {Poly<S>(std::vector<S>(c.begin() + static_cast<std::ptrdiff_t>(z), c.end())), z};
}

// Float version: coefficients below 1e-9 times the largest magnitude count as zero.
std::pair<Poly<Complex>, std::size_t> strip_zero_roots(const Poly<Complex>& p);

template <class S>
Poly<S> power(const Poly<S>& p, unsigned k) {
  Poly<S> out({Ring<S>::one()});
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

using IntPoly = Poly<Integer>;

struct Factor {
  IntPoly poly;
  unsigned multiplicity = 1;
};

// Product of factors with multiplicities; the empty product is 1.
IntPoly expand_factored(const std::vector<Factor>& factors);

// Coefficients of an exact polynomial that are all real constants.
std::optional<IntPoly> to_integer_poly(const Poly<GaussLaurent>& p);
Poly<GaussLaurent> to_laurent_poly(const IntPoly& p);

// Substitute q = 1 in every coefficient.
Poly<GaussLaurent> specialize_q_one(const Poly<GaussLaurent>& p);

std::string to_string(const IntPoly& p, char var = 't');
std::string to_string(const Poly<GaussLaurent>& p, char var = 't');

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// ascending. Throws std::invalid_argument if the input is not Hermitian to
// within 1e-12.
std::vector<double> hermitian_eigenvalues(const Matrix<Complex>& m);

}  // namespace kast
