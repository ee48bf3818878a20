#include <doctest.h>

#include "kast/errors.hpp"
#include "kast/singular.hpp"
#include "kast/verify.hpp"
#include "support.hpp"

using namespace kast;

namespace {

const GaussLaurent q = GaussLaurent::monomial(1, 1);
const GaussLaurent q_inv = GaussLaurent::monomial(1, -1);

using LPoly = Poly<GaussLaurent>;

}  // namespace

TEST_CASE("matrices from cocycles") {
  const PlanarGraph g = rectangle_grid(2, 2);
  const auto k = build_matrix(g, kasteleyn_class(g), ExactBackend{});
  int minus = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK((k(i, j) == GaussLaurent(1) || k(i, j) == GaussLaurent(-1)));
      minus += k(i, j) == GaussLaurent(-1);
    }
  }
  CHECK(minus % 2 == 1);

  const PlanarGraph h = aztec_diamond(2);
  const auto z = build_matrix(h, Cocycle::zero(h), ExactBackend{});
  for (std::size_t i = 0; i < h.n_white(); ++i) {
    for (std::size_t j = 0; j < h.n_black(); ++j) {
      const bool adjacent = h.edge_between(h.whites()[i], h.blacks()[j]).has_value();
      CHECK(z(i, j) == GaussLaurent(adjacent ? 1 : 0));
    }
  }
  const auto a = build_matrix(h, kasteleyn_q_class(h), ExactBackend{});
  for (std::size_t i = 0; i < h.n_white(); ++i) {
    for (std::size_t j = 0; j < h.n_black(); ++j) {
      const bool adjacent = h.edge_between(h.whites()[i], h.blacks()[j]).has_value();
      CHECK(a(i, j) * a(i, j).conj() == GaussLaurent(adjacent ? 1 : 0));
    }
  }

  const auto kq = build_matrix(g, kasteleyn_q_class(g), ExactBackend{});
  const GaussLaurent d = det_leibniz(kq);
  CHECK(d * d.conj() == 2 + q + q_inv);

  Cocycle third = Cocycle::zero(g);
  third[0].rot = Angle(1, 3);
  CHECK_THROWS_AS(build_matrix(g, third, ExactBackend{}), RepresentabilityError);
  CHECK_NOTHROW(build_matrix(g, third, FloatBackend{}));
}

TEST_CASE("singular polynomials") {
  const PlanarGraph g22 = rectangle_grid(2, 2);
  CHECK(singular_polynomial(g22, kasteleyn_class(g22), ExactBackend{}) == LPoly::from_descending({1, -4, 4}));
  const PlanarGraph g21 = rectangle_grid(2, 1);
  CHECK(singular_polynomial(g21, kasteleyn_class(g21), ExactBackend{}) == LPoly::from_descending({1, -1}));
  const auto pq = singular_polynomial(g22, kasteleyn_q_class(g22), ExactBackend{});
  CHECK(pq == LPoly::from_descending({1, -4, 2 + q + q_inv}));
  CHECK(specialize_q_one(pq) == LPoly::from_descending({1, -4, 4}));
}

TEST_CASE("transposed matrices differ by a power of t") {
  for (const PlanarGraph& g : {rectangle_grid(3, 3), rectangle_grid(3, 2), from_ascii("###\n##.\n")}) {
    const auto a = build_matrix(g, kasteleyn_q_class(g), ExactBackend{});
    const auto left = charpoly(gram(a));
    const auto right = charpoly(gram(a.adjoint()));
    const long gap = static_cast<long>(g.n_black()) - static_cast<long>(g.n_white());
    std::vector<GaussLaurent> shift(static_cast<std::size_t>(std::abs(gap)), GaussLaurent());
    shift.push_back(1);
    if (gap >= 0) CHECK(right == left * LPoly(shift));
    else CHECK(left == right * LPoly(shift));
  }
}

TEST_CASE("coefficients by subgraphs") {
  const PlanarGraph g22 = rectangle_grid(2, 2);
  SubgraphCache cache(g22);
  const Cocycle k = kasteleyn_class(g22);
  CHECK(coeff_by_subgraphs(cache, k, 0, ExactBackend{}) == GaussLaurent(1));
  CHECK(coeff_by_subgraphs(cache, k, 2, ExactBackend{}) == GaussLaurent(4));
  for (const PlanarGraph& g : {rectangle_grid(3, 3), aztec_diamond(2), from_ascii("#.#\n###\n")}) {
    SubgraphCache c(g);
    std::mt19937_64 rng(1);
    for (const Cocycle& a : {kasteleyn_class(g), Cocycle::zero(g), random_class(g, rng)}) {
      CHECK(coeff_by_subgraphs(c, a, 1, ExactBackend{}) == GaussLaurent(-Integer(g.edge_count())));
    }
  }
}

TEST_CASE("coefficients by pipe systems") {
  const PlanarGraph g22 = rectangle_grid(2, 2);
  SubgraphCache cache(g22);
  const Cocycle k = kasteleyn_class(g22);
  CHECK(coeff_by_pipes(cache, k, 0, PipeMode::kasteleyn, ExactBackend{}) == GaussLaurent(1));
  CHECK(coeff_by_pipes(cache, k, 1, PipeMode::kasteleyn, ExactBackend{}) == GaussLaurent(-4));
  CHECK(coeff_by_pipes(cache, k, 2, PipeMode::q, ExactBackend{}) == 2 + q + q_inv);
  // Float backend with q on the unit circle.
  const Complex at = std::polar(1.0, 0.4);
  const Complex f = coeff_by_pipes(cache, k, 2, PipeMode::q, FloatBackend{at});
  CHECK(std::abs(f - (2.0 + at + 1.0 / at)) < 1e-12);

  const PlanarGraph nohole = kast::testing::load("square_nohole.graph");
  SubgraphCache bare(nohole);
  CHECK_THROWS_AS(coeff_by_pipes(bare, Cocycle::zero(bare.graph()), 1, PipeMode::q, ExactBackend{}), InputError);
}

TEST_CASE("float coefficients match the float matrix") {
  const PlanarGraph g = rectangle_grid(3, 3);
  SubgraphCache cache(g);
  std::mt19937_64 rng(4);
  Cocycle a = Cocycle::zero(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) a[e].rot = Angle(static_cast<std::int64_t>(rng() % 10), 10);
  const auto p = singular_polynomial(g, a, FloatBackend{});
  for (std::size_t m = 0; m <= g.n_white(); ++m) {
    CHECK(std::abs(coefficient_km(p, g.n_white(), m) - coeff_by_subgraphs(cache, a, m, FloatBackend{})) < 1e-9);
    CHECK(std::abs(coefficient_km(p, g.n_white(), m) -
                   coeff_by_pipes(cache, a, m, PipeMode::generalized, FloatBackend{})) < 1e-9);
  }
}

TEST_CASE("verification reports") {
  const auto coeffs = verify_identity(rectangle_grid(2, 3), Identity::coeffs);
  CHECK(coeffs.pass);
  CHECK(coeffs.identity == "coeffs");

  const auto qp = verify_identity(rectangle_grid(2, 2), Identity::qpoly);
  CHECK(qp.pass);
  CHECK(std::find(qp.notes.begin(), qp.notes.end(), std::string(q_convention_note)) != qp.notes.end());

  const auto d = verify_identity(rectangle_grid(2, 2), Identity::det);
  CHECK(d.pass);
  CHECK(d.lhs[0]["case"] == "zero");
  CHECK(d.lhs[0]["value"] == 0);
  CHECK(d.rhs[0]["value"] == 0);

  const auto skipped = verify_identity(rectangle_grid(3, 3), Identity::det);
  CHECK(skipped.pass);
  CHECK(skipped.notes.front() == "skipped: not square");

  for (Identity w : {Identity::det, Identity::coeffs, Identity::pipes, Identity::gauge, Identity::parity}) {
    const auto r1 = verify_identity(from_ascii("###\n#.#\n###\n"), w, {}, 9);
    const auto r2 = verify_identity(from_ascii("###\n#.#\n###\n"), w, {}, 9);
    CHECK(r1.pass);
    CHECK(r1.to_json().dump() == r2.to_json().dump());
    CHECK(r1.seed == 9);
  }

  const PlanarGraph big = rectangle_grid(6, 5);
  CHECK_THROWS_AS(verify_identity(big, Identity::coeffs, Limits{12, 20}), LimitError);
  CHECK_THROWS_AS(verify_identity(rectangle_grid(4, 3), Identity::coeffs, Limits{12, 5}), LimitError);
  CHECK_NOTHROW(verify_identity(big, Identity::gauge));
  CHECK_THROWS_AS(parse_identity("nope"), std::invalid_argument);
}

TEST_CASE("json forms") {
  const PlanarGraph g = rectangle_grid(2, 2);
  CHECK(to_json(singular_polynomial(g, kasteleyn_class(g), ExactBackend{})).dump() ==
        R"({"var":"t","coeffs":[1,-4,4]})");
  CHECK(to_json(GaussLaurent::monomial(GaussInt(0, 2), -1)).dump() == R"([{"exp":-1,"re":0,"im":2}])");
  const Integer huge = Integer(1) << 80;
  CHECK(to_json(huge).is_string());
  CHECK(to_json(Integer(-5)) == -5);
}
