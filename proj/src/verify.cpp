#include "kast/verify.hpp"

#include <limits>
#include <sstream>

#include "kast/errors.hpp"

namespace kast {

const char* const q_convention_note =
    "q-class convention: rotation part equals the Kasteleyn class and the q exponent counts winding "
    "around the hole witnesses (+1 on each counterclockwise hole boundary); with rotation 0 on hole "
    "boundaries the pipe-system sum would not match the matrix";

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json to_json(const GaussLaurent& x) {
  if (x.is_zero()) return 0;
  if (auto v = x.as_integer()) return to_json(*v);
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back({{"exp", t.exp}, {"re", to_json(t.coef.re)}, {"im", to_json(t.coef.im)}});
  return terms;
}

Json to_json(const Complex& x) {
  if (std::abs(x.imag()) < 1e-9 * std::max(1.0, std::abs(x.real()))) return x.real();
  return Json::array({{{"exp", 0}, {"re", x.real()}, {"im", x.imag()}}});
}

namespace {

template <class S>
Json poly_json(const Poly<S>& p) {
  Json coeffs = Json::array();
  for (const S& c : p.descending()) coeffs.push_back(to_json(c));
  return {{"var", "t"}, {"coeffs", coeffs}};
}

}  // namespace

Json to_json(const IntPoly& p) { return poly_json(p); }
Json to_json(const Poly<GaussLaurent>& p) { return poly_json(p); }
Json to_json(const Poly<Complex>& p) { return poly_json(p); }

Json VerificationReport::to_json() const {
  return {{"identity", identity}, {"graph", graph}, {"lhs", lhs}, {"rhs", rhs},
          {"pass", pass},         {"seed", seed},   {"notes", notes}};
}

Identity parse_identity(const std::string& name) {
  for (Identity i : {Identity::det, Identity::coeffs, Identity::pipes, Identity::qpoly, Identity::gauge,
                     Identity::parity}) {
    if (name == to_string(i)) return i;
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

const char* to_string(Identity which) {
  switch (which) {
    case Identity::det: return "det";
    case Identity::coeffs: return "coeffs";
    case Identity::pipes: return "pipes";
    case Identity::qpoly: return "qpoly";
    case Identity::gauge: return "gauge";
    case Identity::parity: return "parity";
  }
  return "?";
}

Cocycle random_class(const PlanarGraph& g, std::mt19937_64& rng) {
  Cocycle c = Cocycle::zero(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) c[e].rot = Angle::quarter(static_cast<int>(rng() % 4));
  return c;
}

VertexPotential random_potential(const PlanarGraph& g, std::mt19937_64& rng) {
  VertexPotential d(g.vertex_count());
  for (Label& l : d) {
    l.rot = Angle::quarter(static_cast<int>(rng() % 4));
    l.qexp = static_cast<std::int64_t>(rng() % 3) - 1;
  }
  return d;
}

std::vector<NamedClass> class_suite(const PlanarGraph& g, std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedClass> out{{"zero", Cocycle::zero(g)}, {"kasteleyn", kasteleyn_class(g)}};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) out.push_back({"random-" + std::to_string(i), random_class(g, rng)});
  return out;
}

void check_limits(const PlanarGraph& g, Identity which, const Limits& limits) {
  if (which == Identity::gauge) return;
  const std::size_t v = g.vertex_count();
  const std::size_t top = std::min(g.n_white(), g.n_black());
  const bool sweeps = which == Identity::coeffs || which == Identity::pipes || which == Identity::qpoly;
  if (v <= limits.max_vertices && (!sweeps || top <= limits.max_m)) return;
  std::ostringstream os;
  os << "refusing '" << to_string(which) << "' on " << v << " vertices (limits: max vertices "
     << limits.max_vertices << ", max m " << limits.max_m << "); needs --max-vertices " << v;
  if (sweeps) {
    Integer subgraphs = 0;
    for (std::size_t m = 0; m <= top; ++m) subgraphs += binomial(g.n_white(), m) * binomial(g.n_black(), m);
    os << " --max-m " << top << " and an enumeration over " << subgraphs << " balanced subgraphs";
  } else {
    os << " and a perfect-matching enumeration";
  }
  throw LimitError(os.str());
}

namespace {

template <class S>
Poly<S> poly_from_km(const std::vector<S>& km) {
  // km[m] multiplies t^(n-m).
  return Poly<S>::from_descending(km);
}

void record(VerificationReport& r, const std::string& label, Json lhs, Json rhs, bool ok) {
  r.lhs.push_back({{"case", label}, {"value", std::move(lhs)}});
  r.rhs.push_back({{"case", label}, {"value", std::move(rhs)}});
  if (!ok) {
    r.pass = false;
    r.notes.push_back("mismatch: " + label);
  }
}

void verify_det(const PlanarGraph& g, VerificationReport& r) {
  if (g.n_white() != g.n_black()) {
    r.notes.push_back("skipped: not square");
    return;
  }
  const Cocycle k = kasteleyn_class(g);
  for (const NamedClass& nc : class_suite(g, r.seed)) {
    const GaussLaurent d = det(build_matrix(g, nc.cocycle, ExactBackend{}));
    const GaussLaurent lhs = d * d.conj();
    const GaussLaurent rhs = delta(g, nc.cocycle + k, ExactBackend{});
    record(r, nc.name, to_json(lhs), to_json(rhs), lhs == rhs);
  }
  const GaussLaurent dk = det(build_matrix(g, k, ExactBackend{}));
  const auto value = dk.as_integer();
  const Integer count = count_matchings(g);
  const bool ok = value && abs(*value) == count;
  record(r, "|det K| vs matchings", value ? to_json(Integer(abs(*value))) : to_json(dk), to_json(count), ok);
}

void verify_coeffs(const PlanarGraph& g, VerificationReport& r) {
  SubgraphCache cache(g);
  const std::size_t n = g.n_white();
  for (const NamedClass& nc : class_suite(g, r.seed)) {
    const auto p = singular_polynomial(g, nc.cocycle, ExactBackend{});
    std::vector<GaussLaurent> km;
    for (std::size_t m = 0; m <= n; ++m) km.push_back(coeff_by_subgraphs(cache, nc.cocycle, m, ExactBackend{}));
    const auto sums = poly_from_km(km);
    record(r, nc.name, to_json(p), to_json(sums), p == sums);
  }
}

void verify_pipes(const PlanarGraph& g, VerificationReport& r) {
  SubgraphCache cache(g);
  const std::size_t n = g.n_white();
  auto sweep = [&](auto f) {
    std::vector<GaussLaurent> km;
    for (std::size_t m = 0; m <= n; ++m) km.push_back(f(m));
    return poly_from_km(km);
  };
  for (const NamedClass& nc : class_suite(g, r.seed)) {
    const auto subs = sweep([&](std::size_t m) { return coeff_by_subgraphs(cache, nc.cocycle, m, ExactBackend{}); });
    const auto pipes = sweep([&](std::size_t m) {
      return coeff_by_pipes(cache, nc.cocycle, m, PipeMode::generalized, ExactBackend{});
    });
    record(r, nc.name + " generalized", to_json(subs), to_json(pipes), subs == pipes);
  }
  const Cocycle k = kasteleyn_class(g);
  const auto subs = sweep([&](std::size_t m) { return coeff_by_subgraphs(cache, k, m, ExactBackend{}); });
  const auto pipes = sweep([&](std::size_t m) { return coeff_by_pipes(cache, k, m, PipeMode::kasteleyn, ExactBackend{}); });
  record(r, "kasteleyn relative", to_json(subs), to_json(pipes), subs == pipes);
  if (g.has_witnesses()) {
    const Cocycle kq = kasteleyn_q_class(g);
    const auto qsubs = sweep([&](std::size_t m) { return coeff_by_subgraphs(cache, kq, m, ExactBackend{}); });
    const auto qpipes = sweep([&](std::size_t m) { return coeff_by_pipes(cache, kq, m, PipeMode::q, ExactBackend{}); });
    record(r, "q area", to_json(qsubs), to_json(qpipes), qsubs == qpipes);
    r.notes.push_back(q_convention_note);
  } else {
    r.notes.push_back("q mode skipped: no hole witnesses");
  }
}

void verify_qpoly(const PlanarGraph& g, VerificationReport& r) {
  const Cocycle kq = kasteleyn_q_class(g);
  SubgraphCache cache(g);
  const auto p = singular_polynomial(g, kq, ExactBackend{});
  std::vector<GaussLaurent> km;
  for (std::size_t m = 0; m <= g.n_white(); ++m) km.push_back(coeff_by_pipes(cache, kq, m, PipeMode::q, ExactBackend{}));
  const auto sums = poly_from_km(km);
  record(r, "matrix vs pipe systems", to_json(p), to_json(sums), p == sums);
  const auto at_one = specialize_q_one(p);
  const auto pg = singular_polynomial(g, kasteleyn_class(g), ExactBackend{});
  record(r, "q=1 vs P_G", to_json(at_one), to_json(pg), at_one == pg);
  r.notes.push_back(q_convention_note);
}

void verify_gauge(const PlanarGraph& g, VerificationReport& r) {
  std::vector<NamedClass> bases{{"kasteleyn", kasteleyn_class(g)}};
  if (g.has_witnesses()) bases.push_back({"q", kasteleyn_q_class(g)});
  std::mt19937_64 rng(r.seed);
  bases.push_back({"random", random_class(g, rng)});
  for (const NamedClass& base : bases) {
    const auto p0 = singular_polynomial(g, base.cocycle, ExactBackend{});
    for (int i = 0; i < 10; ++i) {
      const VertexPotential d = random_potential(g, rng);
      const auto p = singular_polynomial(g, gauge_transform(g, base.cocycle, d), ExactBackend{});
      record(r, base.name + " potential-" + std::to_string(i), to_json(p0), to_json(p), p == p0);
    }
  }
}

void verify_parity(const PlanarGraph& g, VerificationReport& r) {
  const Cocycle k = kasteleyn_class(g);
  const auto all = enumerate_matchings(g);
  std::size_t agree = 0;
  for (const Matching& m1 : all) {
    for (const Matching& m2 : all) {
      const Label v = evaluate(g, k, concat(matching_chain(g, m2), matching_chain(g, m1, -1)));
      const int from_class = v.rot.is_zero() ? 1 : -1;
      if (permutation_parity(g, m1, m2) == from_class) {
        ++agree;
      } else if (r.pass) {
        r.pass = false;
        r.notes.push_back("mismatch at " + to_string(g, m1) + " / " + to_string(g, m2));
      }
    }
  }
  r.lhs.push_back({{"case", "pairs agreeing"}, {"value", agree}});
  r.rhs.push_back({{"case", "pairs"}, {"value", all.size() * all.size()}});
}

}  // namespace

VerificationReport verify_identity(const PlanarGraph& g, Identity which, const Limits& limits, std::uint64_t seed) {
  check_limits(g, which, limits);
  VerificationReport r;
  r.identity = to_string(which);
  r.graph = describe(g);
  r.seed = seed;
  switch (which) {
    case Identity::det: verify_det(g, r); break;
    case Identity::coeffs: verify_coeffs(g, r); break;
    case Identity::pipes: verify_pipes(g, r); break;
    case Identity::qpoly: verify_qpoly(g, r); break;
    case Identity::gauge: verify_gauge(g, r); break;
    case Identity::parity: verify_parity(g, r); break;
  }
  return r;
}

}  // namespace kast
