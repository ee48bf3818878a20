// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fleet.hpp"
#include "kast/matchings.hpp"
#include "kast/rectangles.hpp"
#include "kast/singular.hpp"
#include "kast/verify.hpp"

using namespace kast;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

Outcome tables() {
  Outcome out;
  int n = 0;
  for (const TableEntry& e : reference_tables()) {
    if (!e.is_rectangle()) continue;
    ++n;
    if (!table_check(e).pass) out.fail(e.key);
  }
  if (n != 23) out.fail("expected 23 rectangle entries, found " + std::to_string(n));
  if (out.pass) out.detail = std::to_string(n) + " rectangles";
  return out;
}

Outcome spectra() {
  Outcome out;
  for (int M = 1; M <= 8; ++M) {
    for (int N = 1; N <= 8; ++N) {
      if (!spectrum_check(M, N, 1e-9).pass) out.fail(std::to_string(M) + "x" + std::to_string(N));
    }
  }
  if (out.pass) out.detail = "1 <= M,N <= 8";
  return out;
}

Outcome aztec() {
  Outcome out;
  std::vector<int> seen;
  for (const TableEntry& e : reference_tables()) {
    if (e.is_rectangle()) continue;
    seen.push_back(e.order);
    if (!table_check(e).pass) out.fail(e.key);
    const IntPoly p = reduced_singular_polynomial(aztec_diamond(e.order));
    const unsigned need = e.order == 3 ? 4 : e.order == 5 ? 8 : 0;
    if (root_multiplicity(p, 4) < need) out.fail(e.key + " divisibility by (t-4)^" + std::to_string(need));
  }
  if (seen != std::vector<int>{2, 3, 4, 5}) out.fail("aztec entries missing");
  if (out.pass) out.detail = "orders 2-5, (t-4)^4 | order 3, (t-4)^8 | order 5";
  return out;
}

Outcome fleet_sweep(Identity which, std::uint64_t seed) {
  Outcome out;
  const auto f = kast::testing::fleet();
  for (const auto& fg : f) {
    const auto r = verify_identity(fg.graph, which, Limits{12, 6}, seed);
    if (!r.pass) out.fail(fg.name);
  }
  if (out.pass) out.detail = std::to_string(f.size()) + " graphs";
  return out;
}

Outcome determinants() {
  Outcome out = fleet_sweep(Identity::det, 6);
  const std::pair<std::pair<int, int>, long> expect[] = {{{2, 2}, 2}, {{2, 3}, 3}, {{4, 4}, 36}};
  for (const auto& [dims, count] : expect) {
    const PlanarGraph g = rectangle_grid(dims.first, dims.second);
    const std::size_t brute = count_matchings(g);
    const GaussLaurent d = det(build_matrix(g, kasteleyn_class(g), ExactBackend{}));
    const std::string name = std::to_string(dims.first) + "x" + std::to_string(dims.second);
    if (brute != static_cast<std::size_t>(count)) out.fail(name + " enumeration");
    if (!(d * d.conj() == GaussLaurent(Integer(count * count)))) out.fail(name + " |det K|");
  }
  return out;
}

Outcome qpoly() {
  Outcome out;
  // Hand oracle on the single square: two matchings whose difference is the
  // boundary; after adding the Kasteleyn class the boundary carries q alone,
  // so delta = 1 + 1 + q + q^-1 and the polynomial is t^2 - 4t + delta.
  const PlanarGraph sq = rectangle_grid(2, 2);
  const auto ms = enumerate_matchings(sq);
  if (ms.size() != 2) out.fail("square matchings");
  const Cocycle shifted = kasteleyn_q_class(sq) + kasteleyn_class(sq);
  GaussLaurent by_hand;
  for (const Matching& a : ms) {
    for (const Matching& b : ms) {
      const Label l = evaluate(sq, shifted, concat(matching_chain(sq, a), matching_chain(sq, b, -1)));
      by_hand += eta_exact(l);
    }
  }
  const GaussLaurent q = GaussLaurent::monomial(1, 1), q_inv = GaussLaurent::monomial(1, -1);
  if (!(by_hand == 2 + q + q_inv)) out.fail("hand oracle");
  const auto p = singular_polynomial(sq, kasteleyn_q_class(sq), ExactBackend{});
  if (!(p == Poly<GaussLaurent>::from_descending({1, -4, by_hand}))) out.fail("square polynomial");

  for (auto [r, c] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    if (!verify_identity(rectangle_grid(r, c), Identity::qpoly).pass) out.fail(std::to_string(r) + "x" + std::to_string(c));
  }
  if (out.pass) out.detail = "t^2 - 4t + (" + to_string(by_hand) + ") on the square";
  return out;
}

Outcome minors() {
  Outcome out;
  std::mt19937_64 rng(10);
  int count = 0;
  for (auto [r, c] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
    for (int trial = 0; trial < 20; ++trial, ++count) {
      Matrix<GaussLaurent> a(r, c);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
          if (rng() % 5 == 0) continue;
          const Label l{Angle::quarter(static_cast<int>(rng() % 4)), static_cast<std::int64_t>(rng() % 5) - 2};
          a(i, j) = eta_exact(l);
        }
      }
      const auto p = charpoly(gram(a));
      for (std::size_t m = 0; m <= static_cast<std::size_t>(std::min(r, c)); ++m) {
        const GaussLaurent s = minor_sum(a, m);
        if (!(coefficient_km(p, r, m) == (m % 2 == 0 ? s : -s))) {
          out.fail(std::to_string(r) + "x" + std::to_string(c) + " trial " + std::to_string(trial));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(count) + " matrices";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rectangle tables", tables},
      {"rectangle spectra", spectra},
      {"aztec diamonds", aztec},
      {"coefficients by subgraphs", [] { return fleet_sweep(Identity::coeffs, 4); }},
      {"pipe systems", [] { return fleet_sweep(Identity::pipes, 5); }},
      {"determinants", determinants},
      {"q-polynomials", qpoly},
      {"gauge invariance", [] { return fleet_sweep(Identity::gauge, 8); }},
      {"permutation parity", [] { return fleet_sweep(Identity::parity, 9); }},
      {"minor sums", minors},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str(), secs);
    failures += !o.pass;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
