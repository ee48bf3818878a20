#include <doctest.h>

#include <set>

#include "kast/rectangles.hpp"

using namespace kast;

namespace {

IntPoly ip(std::vector<int> desc) {
  std::vector<Integer> c(desc.begin(), desc.end());
  return IntPoly::from_descending(c);
}

std::set<std::pair<int, int>> as_set(const IndexSet& s) { return {s.indices.begin(), s.indices.end()}; }

}  // namespace

TEST_CASE("sigma squared") {
  CHECK(sigma_squared(2, 2, 1, 1) == doctest::Approx(2).epsilon(1e-14));
  CHECK(std::abs(sigma_squared(3, 3, 2, 2)) < 1e-14);
  CHECK(sigma_squared(3, 3, 1, 1) == doctest::Approx(4).epsilon(1e-14));
  CHECK_THROWS_AS(sigma_squared(3, 3, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(sigma_squared(3, 3, 1, 4), std::out_of_range);
  for (int M = 1; M <= 9; ++M) {
    for (int N = 1; N <= 9; ++N) {
      for (int k = 1; k <= M; ++k) {
        for (int l = 1; l <= N; ++l) {
          const double s = sigma_squared(M, N, k, l);
          CHECK(std::abs(s - sigma_squared(M, N, M + 1 - k, l)) < 1e-12);
          CHECK(std::abs(s - sigma_squared(M, N, k, N + 1 - l)) < 1e-12);
          const bool center = M % 2 == 1 && N % 2 == 1 && 2 * k == M + 1 && 2 * l == N + 1;
          CHECK((s < 1e-12) == center);
        }
      }
    }
  }
}

TEST_CASE("index sets") {
  CHECK(as_set(x_minus(2, 2)) == std::set<std::pair<int, int>>{{1, 1}, {1, 2}});
  CHECK(as_set(x_minus(3, 3)) == std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
  CHECK(x_minus(1, 1).indices.empty());
  for (int M = 1; M <= 12; ++M) {
    for (int N = 1; N <= 12; ++N) {
      CHECK(x_minus(M, N).indices.size() == static_cast<std::size_t>(M * N / 2));
      CHECK(x_plus(M, N).indices.size() == static_cast<std::size_t>((M * N + 1) / 2));
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_poly(2, 2) == ip({1, -4, 4}));
  CHECK(closed_form_poly(4, 4) == expand_factored({{ip({1, -6, 4}), 2}, {ip({1, -3}), 4}}));
  CHECK(closed_form_poly(6, 4) == expand_factored({{ip({1, -19, 142, -529, 1017, -922, 281}), 2}}));
  CHECK(closed_form_poly(1, 1) == ip({1}));
  for (int M = 1; M <= 6; ++M) {
    for (int N = 1; N <= 6; ++N) {
      const IntPoly p = closed_form_poly(M, N);
      CHECK(p.degree() == M * N / 2);
      CHECK(p == closed_form_poly(N, M));
    }
  }
}

TEST_CASE("reference tables") {
  const auto& t = reference_tables();
  std::size_t rects = 0, aztecs = 0;
  for (const auto& e : t) (e.is_rectangle() ? rects : aztecs) += 1;
  CHECK(rects == 23);
  CHECK(aztecs == 4);
  for (const auto& e : t) {
    const long deg = expand_factored(e.factors).degree();
    if (e.is_rectangle()) CHECK(deg == e.rows * e.cols / 2);
    else CHECK(deg == e.order * (e.order + 1));
  }
  for (const std::string key : {"[3,2]", "[5,5]", "aztec-3"}) {
    for (const auto& e : t) {
      if (e.key == key) CHECK_MESSAGE(table_check(e).pass, key);
    }
  }
  CHECK_THROWS(parse_reference_tables("{\"rectangles\": 3}"));
}

TEST_CASE("root multiplicity") {
  CHECK(root_multiplicity(ip({1, -4}), 4) == 1);
  CHECK(root_multiplicity(expand_factored({{ip({1, -4}), 3}, {ip({1, 1}), 1}}), 4) == 3);
  CHECK(root_multiplicity(ip({1, 0, 1}), 4) == 0);
}

TEST_CASE("singular vectors") {
  for (auto [M, N] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{4, 3}, std::pair{1, 4}, std::pair{5, 2}}) {
    CHECK_MESSAGE(eigvec_check(M, N).pass, M << "x" << N);
  }
}

TEST_CASE("spectra on small grids") {
  for (int M = 1; M <= 4; ++M) {
    for (int N = 1; N <= 4; ++N) CHECK(spectrum_check(M, N).pass);
  }
}
