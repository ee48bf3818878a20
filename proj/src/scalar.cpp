#include "kast/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "kast/errors.hpp"

namespace kast {

std::string to_string(const GaussInt& z) {
  if (z.im == 0) return z.re.str();
  if (z.re == 0) {
    if (z.im == 1) return "i";
    if (z.im == -1) return "-i";
    return z.im.str() + "i";
  }
  const Integer abs_im = z.im < 0 ? Integer(-z.im) : z.im;
  return "(" + z.re.str() + (z.im < 0 ? "-" : "+") + (abs_im == 1 ? std::string() : abs_im.str()) + "i)";
}

GaussLaurent::GaussLaurent(GaussInt c, std::int64_t exp) {
  if (!c.is_zero()) terms_.push_back({exp, std::move(c)});
}

GaussLaurent GaussLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  GaussLaurent out;
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coef += t.coef;
      if (out.terms_.back().coef.is_zero()) out.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

GaussInt GaussLaurent::coefficient(std::int64_t exp) const {
  for (const Term& t : terms_) {
    if (t.exp == exp) return t.coef;
  }
  return {};
}

std::optional<Integer> GaussLaurent::as_integer() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef.im == 0) return terms_[0].coef.re;
  return std::nullopt;
}

GaussInt GaussLaurent::at_q_one() const {
  GaussInt sum;
  for (const Term& t : terms_) sum += t.coef;
  return sum;
}

Complex GaussLaurent::evaluate(Complex q) const {
  Complex sum{};
  for (const Term& t : terms_) {
    sum += Complex(t.coef.re.convert_to<double>(), t.coef.im.convert_to<double>()) *
           std::pow(q, static_cast<double>(t.exp));
  }
  return sum;
}

GaussLaurent GaussLaurent::conj() const {
  GaussLaurent out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.push_back({-it->exp, it->coef.conj()});
  return out;
}

GaussLaurent GaussLaurent::operator-() const {
  GaussLaurent out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

namespace {

template <class Combine>
GaussLaurent merge(const GaussLaurent& a, const GaussLaurent& b, Combine combine, bool negate_b) {
  std::vector<GaussLaurent::Term> out;
  const auto& x = a.terms();
  const auto& y = b.terms();
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exp < y[j].exp)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exp < x[i].exp) {
      out.push_back({y[j].exp, negate_b ? -y[j].coef : y[j].coef});
      ++j;
    } else {
      GaussInt c = combine(x[i].coef, y[j].coef);
      if (!c.is_zero()) out.push_back({x[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return GaussLaurent::from_terms(std::move(out));
}

}  // namespace

GaussLaurent operator+(const GaussLaurent& a, const GaussLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, [](const GaussInt& u, const GaussInt& v) { return u + v; }, false);
}

GaussLaurent operator-(const GaussLaurent& a, const GaussLaurent& b) {
  if (b.is_zero()) return a;
  return merge(a, b, [](const GaussInt& u, const GaussInt& v) { return u - v; }, true);
}

GaussLaurent operator*(const GaussLaurent& a, const GaussLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return GaussLaurent(a.terms_[0].coef * b.terms_[0].coef, a.terms_[0].exp + b.terms_[0].exp);
  }
  std::map<std::int64_t, GaussInt> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[s.exp + t.exp] += s.coef * t.coef;
  }
  GaussLaurent out;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({e, std::move(c)});
  }
  return out;
}

std::string to_string(const GaussLaurent& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& t : x.terms()) {
    std::string c = to_string(t.coef);
    if (!s.empty()) s += (c.front() == '-') ? " - " : " + ";
    if (!s.empty() && c.front() == '-') c.erase(0, 1);
    if (t.exp == 0) {
      s += c;
      continue;
    }
    if (c == "1") {
      c.clear();
    } else if (c == "-1") {
      c = "-";
    }
    s += c + "q";
    if (t.exp != 1) s += "^" + std::to_string(t.exp);
  }
  return s;
}

GaussLaurent eta_exact(const Label& value) {
  static const GaussInt units[4] = {GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)};
  const Angle& r = value.rot;
  if (4 % r.den() != 0) {
    throw RepresentabilityError("rotation " + to_string(r) +
                                " has no exact Gaussian-integer image (denominator must divide 4)");
  }
  const auto quarter = static_cast<std::size_t>(r.num() * (4 / r.den()));
  return GaussLaurent::monomial(units[quarter], value.qexp);
}

Complex eta_float(const Label& value, Complex q) {
  const double angle = 2.0 * std::numbers::pi * value.rot.turns();
  Complex z = std::polar(1.0, angle);
  // Exact values on the quarter turns keep float results reproducible.
  if (4 % value.rot.den() == 0) {
    static const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    z = units[value.rot.num() * (4 / value.rot.den())];
  }
  if (value.qexp != 0) z *= std::pow(q, static_cast<double>(value.qexp));
  return z;
}

}  // namespace kast
