#include "kast/poly.hpp"

#include <cmath>

namespace kast {

std::pair<Poly<Complex>, std::size_t> strip_zero_roots(const Poly<Complex>& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no finite zero-root multiplicity");
  const auto& c = p.ascending();
  double scale = 0.0;
  for (const Complex& x : c) scale = std::max(scale, std::abs(x));
  std::size_t z = 0;
  while (z + 1 < c.size() && std::abs(c[z]) < 1e-9 * scale) ++z;
  return {Poly<Complex>(std::vector<Complex>(c.begin() + static_cast<std::ptrdiff_t>(z), c.end())), z};
}

IntPoly expand_factored(const std::vector<Factor>& factors) {
  IntPoly out({Integer(1)});
  for (const Factor& f : factors) out = out * power(f.poly, f.multiplicity);
  return out;
}

std::optional<IntPoly> to_integer_poly(const Poly<GaussLaurent>& p) {
  std::vector<Integer> out;
  for (const GaussLaurent& c : p.ascending()) {
    auto v = c.as_integer();
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return IntPoly(std::move(out));
}

Poly<GaussLaurent> to_laurent_poly(const IntPoly& p) {
  return p.map([](const Integer& x) { return GaussLaurent(x); });
}

Poly<GaussLaurent> specialize_q_one(const Poly<GaussLaurent>& p) {
  return p.map([](const GaussLaurent& x) { return GaussLaurent(x.at_q_one()); });
}

namespace {

template <class S, class F>
std::string poly_string(const Poly<S>& p, char var, F coef_string) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& c = p.ascending();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (Ring<S>::is_zero(c[k])) continue;
    std::string cs = coef_string(c[k]);
    const bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (k == 0) {
      s += cs;
      continue;
    }
    if (cs != "1") s += cs;
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace

std::string to_string(const IntPoly& p, char var) {
  return poly_string(p, var, [](const Integer& x) { return x.str(); });
}

std::string to_string(const Poly<GaussLaurent>& p, char var) {
  return poly_string(p, var, [](const GaussLaurent& x) { return to_string(x); });
}

std::vector<double> hermitian_eigenvalues(const Matrix<Complex>& input) {
  if (!input.square()) throw std::invalid_argument("eigenvalues need a square matrix");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(input(i, j) - std::conj(input(j, i))) > 1e-12) {
        throw std::invalid_argument("matrix is not Hermitian");
      }
    }
  }
  Matrix<Complex> a = input;
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_norm() >= 1e-12; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex h = a(p, q);
        const double r = std::abs(h);
        if (r == 0.0) continue;
        // Phase e^{i phi} = h / r turns the pivot real; then a real rotation
        // annihilates it. Combined unitary V acts on columns p, q.
        const Complex phase = h / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex vpp = c;
        const Complex vpq = s;
        const Complex vqp = -s * std::conj(phase);
        const Complex vqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace kast
