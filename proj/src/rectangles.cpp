#include "kast/rectangles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kast/cohomology.hpp"
#include "kast/singular.hpp"

namespace kast {

extern const char* const reference_tables_json;

double sigma_squared(int M, int N, int k, int l) {
  if (M < 1 || N < 1 || k < 1 || k > M || l < 1 || l > N) throw std::out_of_range("sigma index out of range");
  const double a = std::cos(k * std::numbers::pi / (M + 1));
  const double b = std::cos(l * std::numbers::pi / (N + 1));
  return 4 * a * a + 4 * b * b;
}

namespace {

// Membership test with doubled coordinates to stay in integers.
IndexSet index_set(int M, int N, bool plus) {
  if (M < 1 || N < 1) throw std::invalid_argument("grid dimensions must be positive");
  IndexSet out{M, N, {}};
  for (int k = 1; 2 * k <= M + 1; ++k) {
    for (int l = 1; l <= N; ++l) {
      if (2 * k == M + 1 && (plus ? 2 * l > N + 1 : 2 * l >= N + 1)) continue;
      out.indices.emplace_back(k, l);
    }
  }
  return out;
}

}  // namespace

IndexSet x_plus(int M, int N) { return index_set(M, N, true); }
IndexSet x_minus(int M, int N) { return index_set(M, N, false); }

IntPoly closed_form_poly(int M, int N) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float pi = boost::math::constants::pi<Float>();
  std::vector<Float> c{Float(1)};  // ascending
  for (const auto& [k, l] : x_minus(M, N).indices) {
    const Float a = cos(pi * k / (M + 1));
    const Float b = cos(pi * l / (N + 1));
    const Float s = 4 * a * a + 4 * b * b;
    std::vector<Float> next(c.size() + 1, Float(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= s * c[i];
    }
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (const Float& x : c) {
    const Float r = round(x);
    if (abs(x - r) > Float(1e-6)) {
      throw std::runtime_error("closed form for " + std::to_string(M) + "x" + std::to_string(N) +
                               " is not within 1e-6 of an integer polynomial");
    }
    out.push_back(r.convert_to<Integer>());
  }
  return IntPoly(std::move(out));
}

std::vector<TableEntry> parse_reference_tables(const std::string& json_text) {
  const Json doc = Json::parse(json_text);
  std::vector<TableEntry> out;
  auto factors = [](const Json& list) {
    std::vector<Factor> fs;
    for (const Json& f : list) {
      std::vector<Integer> desc;
      for (const Json& c : f.at("coeffs")) desc.emplace_back(c.get<std::int64_t>());
      fs.push_back({IntPoly::from_descending(desc), f.at("multiplicity").get<unsigned>()});
    }
    return fs;
  };
  for (const Json& e : doc.at("rectangles")) {
    out.push_back({e.at("key"), e.at("rows"), e.at("cols"), 0, factors(e.at("factors"))});
  }
  for (const Json& e : doc.at("aztec")) {
    out.push_back({e.at("key"), 0, 0, e.at("order"), factors(e.at("factors"))});
  }
  return out;
}

const std::vector<TableEntry>& reference_tables() {
  static const std::vector<TableEntry> tables = parse_reference_tables(reference_tables_json);
  return tables;
}

IntPoly reduced_singular_polynomial(const PlanarGraph& g) {
  const auto p = to_integer_poly(singular_polynomial(g, kasteleyn_class(g), ExactBackend{}));
  if (!p) throw std::logic_error("Kasteleyn singular polynomial has non-integer coefficients");
  return strip_zero_roots(*p).first;
}

unsigned root_multiplicity(const IntPoly& p, const Integer& r) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  unsigned j = 0;
  std::vector<Integer> c = p.descending();
  while (c.size() > 1) {
    // Synthetic division by (t - r).
    std::vector<Integer> q{c[0]};
    for (std::size_t i = 1; i + 1 < c.size(); ++i) q.push_back(c[i] + r * q.back());
    if (c.back() + r * q.back() != 0) break;
    c = std::move(q);
    ++j;
  }
  return j;
}

VerificationReport table_check(const TableEntry& entry) {
  VerificationReport r;
  r.identity = "table " + entry.key;
  const IntPoly expected = expand_factored(entry.factors);
  const PlanarGraph g = entry.is_rectangle() ? rectangle_grid(entry.rows, entry.cols) : aztec_diamond(entry.order);
  r.graph = describe(g);
  r.lhs.push_back({{"case", "reference"}, {"value", to_json(expected)}});
  const IntPoly general = reduced_singular_polynomial(g);
  r.rhs.push_back({{"case", "general"}, {"value", to_json(general)}});
  if (!(general == expected)) {
    r.pass = false;
    r.notes.push_back("general machinery disagrees");
  }
  if (entry.is_rectangle()) {
    const IntPoly closed = closed_form_poly(entry.rows, entry.cols);
    r.rhs.push_back({{"case", "closed form"}, {"value", to_json(closed)}});
    if (!(closed == expected)) {
      r.pass = false;
      r.notes.push_back("closed form disagrees");
    }
  } else if (entry.order % 2 == 1 && entry.order >= 3) {
    const unsigned need = 2 * static_cast<unsigned>(entry.order - 1);
    const unsigned have = root_multiplicity(general, 4);
    r.rhs.push_back({{"case", "multiplicity of t = 4"}, {"value", have}});
    r.notes.push_back("(t-4)^" + std::to_string(need) + (have >= need ? " divides" : " does not divide"));
    if (have < need) r.pass = false;
  }
  return r;
}

std::vector<VerificationReport> table_check() {
  std::vector<VerificationReport> out;
  for (const TableEntry& e : reference_tables()) out.push_back(table_check(e));
  return out;
}

VerificationReport spectrum_check(int M, int N, double tolerance) {
  VerificationReport r;
  r.identity = "spectrum " + std::to_string(M) + "x" + std::to_string(N);
  const PlanarGraph g = rectangle_grid(M, N);
  r.graph = describe(g);
  const auto eig = hermitian_eigenvalues(gram(build_matrix(g, kasteleyn_class(g), FloatBackend{})));
  constexpr double zero_cut = 1e-6;
  std::vector<double> numeric, closed;
  for (double x : eig) {
    if (std::abs(x) > zero_cut) numeric.push_back(x);
  }
  for (const auto& [k, l] : x_minus(M, N).indices) {
    const double s = sigma_squared(M, N, k, l);
    if (s > zero_cut) closed.push_back(s);
  }
  std::sort(closed.begin(), closed.end());
  r.lhs = numeric;
  r.rhs = closed;
  if (numeric.size() != closed.size()) {
    r.pass = false;
    r.notes.push_back("different number of nonzero eigenvalues");
    return r;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) worst = std::max(worst, std::abs(numeric[i] - closed[i]));
  r.pass = worst <= tolerance;
  r.notes.push_back("max deviation " + std::to_string(worst));
  return r;
}

VerificationReport eigvec_check(int M, int N) {
  VerificationReport r;
  r.identity = "singular vectors " + std::to_string(M) + "x" + std::to_string(N);
  const PlanarGraph g = rectangle_grid(M, N);
  r.graph = describe(g);
  auto coord = [&](std::size_t v) {
    const Point& p = g.vertices()[v].pos;
    return std::pair<int, int>{p.x.convert_to<int>(), p.y.convert_to<int>()};
  };
  std::vector<std::size_t> row(g.vertex_count()), col(g.vertex_count());
  for (std::size_t i = 0; i < g.n_white(); ++i) row[g.whites()[i]] = i;
  for (std::size_t j = 0; j < g.n_black(); ++j) col[g.blacks()[j]] = j;
  Matrix<Complex> K(g.n_white(), g.n_black());
  for (const Edge& e : g.edges()) {
    const bool horizontal = coord(e.white).second == coord(e.black).second;
    K(row[e.white], col[e.black]) = horizontal ? Complex{1, 0} : Complex{0, 1};
  }
  const Complex alpha = std::polar(1.0, std::numbers::pi / (M + 1));
  const Complex beta = std::polar(1.0, std::numbers::pi / (N + 1));
  auto vec = [&](const std::vector<std::size_t>& side, int k, int l) {
    std::vector<Complex> v;
    for (std::size_t x : side) {
      const auto [kk, ll] = coord(x);
      v.push_back((std::pow(alpha, k * kk) - std::pow(alpha, -k * kk)) *
                  (std::pow(beta, l * ll) - std::pow(beta, -l * ll)));
    }
    return v;
  };
  auto norm = [](const std::vector<Complex>& v) {
    double s = 0;
    for (const Complex& x : v) s += std::norm(x);
    return std::sqrt(s);
  };
  double worst_residual = 0.0;
  double worst_norm_gap = 0.0;
  for (const auto& [k, l] : x_minus(M, N).indices) {
    const auto w = vec(g.whites(), k, l);
    const auto b = vec(g.blacks(), k, l);
    const Complex lambda = (std::pow(alpha, k) + std::pow(alpha, -k)) + Complex{0, 1} * (std::pow(beta, l) + std::pow(beta, -l));
    std::vector<Complex> diff(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      Complex s = 0;
      for (std::size_t j = 0; j < b.size(); ++j) s += K(i, j) * b[j];
      diff[i] = s - lambda * w[i];
    }
    worst_residual = std::max(worst_residual, norm(diff));
    worst_norm_gap = std::max(worst_norm_gap, std::abs(norm(w) - norm(b)));
    if (norm(b) < 1e-9) {
      r.pass = false;
      r.notes.push_back("zero black vector at (" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  }
  r.lhs.push_back({{"case", "max |K b - lambda w|"}, {"value", worst_residual}});
  r.lhs.push_back({{"case", "max ||w| - |b||"}, {"value", worst_norm_gap}});
  r.rhs.push_back({{"case", "tolerance"}, {"value", 1e-9}});
  if (worst_residual >= 1e-9 || worst_norm_gap >= 1e-9) r.pass = false;
  return r;
}

}  // namespace kast
