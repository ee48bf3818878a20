#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kast/cohomology.hpp"
#include "kast/graph.hpp"
#include "kast/scalar.hpp"

namespace kast {

// Perfect matching as sorted edge indices. As a chain, every edge is directed
// black -> white.
struct Matching {
  std::vector<std::size_t> edges;
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

Chain matching_chain(const PlanarGraph& g, const Matching& m, std::int64_t multiplicity = 1);

// Visits every perfect matching once, branching on a minimum-degree
// uncovered vertex (smallest index on ties) and pruning as soon as an
// uncovered vertex has no uncovered neighbour. The callback returns false to
// stop early.
void for_each_matching(const PlanarGraph& g, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(const PlanarGraph& g);
std::size_t count_matchings(const PlanarGraph& g);

// Sign of the permutation mu1^{-1} o mu2 of the white vertices. Throws
// std::invalid_argument when the matchings cover different vertices.
int permutation_parity(const PlanarGraph& g, const Matching& m1, const Matching& m2);

// Evaluation backends: map a label to a ring element.
struct ExactBackend {
  using Scalar = GaussLaurent;
  Scalar eta(const Label& v) const { return eta_exact(v); }
};

struct FloatBackend {
  using Scalar = Complex;
  Complex q{1.0, 0.0};
  Scalar eta(const Label& v) const { return eta_float(v, q); }
};

// delta(a, H) = |sum_mu eta(a(mu - mu0))|^2 for a fixed base matching mu0;
// 0 when H has no perfect matching.
template <class Backend>
typename Backend::Scalar delta(const PlanarGraph& g, const Cocycle& a, const Backend& backend = {}) {
  using S = typename Backend::Scalar;
  S sum = Ring<S>::zero();
  bool have_base = false;
  Label base;
  for_each_matching(g, [&](const Matching& mu) {
    const Label value = evaluate(g, a, matching_chain(g, mu));
    if (!have_base) {
      base = value;
      have_base = true;
    }
    sum += backend.eta(value - base);
    return true;
  });
  return sum * Ring<S>::conj(sum);
}

// The defining double sum over ordered pairs, sum eta(a(mu1 - mu2)).
template <class Backend>
typename Backend::Scalar delta_pairs(const PlanarGraph& g, const Cocycle& a, const Backend& backend = {}) {
  using S = typename Backend::Scalar;
  std::vector<Label> values;
  for_each_matching(g, [&](const Matching& mu) {
    values.push_back(evaluate(g, a, matching_chain(g, mu)));
    return true;
  });
  S sum = Ring<S>::zero();
  for (const Label& x : values) {
    for (const Label& y : values) sum += backend.eta(x - y);
  }
  return sum;
}

// Ordered pair of perfect matchings of a common balanced support. Edge
// indices refer to the parent graph.
struct PipeSystem {
  BalancedSubgraph support;
  Matching first;
  Matching second;

  std::size_t size() const { return support.whites.size(); }
  // second - first, in the parent graph.
  Chain chain(const PlanarGraph& g) const;
};

// Visits all pipe systems of the given size, by support in balanced-subgraph
// order and then by ordered matching pair.
void for_each_pipe_system(const PlanarGraph& g, std::size_t size,
                          const std::function<void(const PipeSystem&, const InducedSubgraph&)>& visit);
std::vector<PipeSystem> pipe_systems(const PlanarGraph& g, std::size_t size);
// Every size from 0 to min(n, n').
std::vector<PipeSystem> all_pipe_systems(const PlanarGraph& g);

// Sorted `<white-id>-<black-id>` pairs, comma separated.
std::string to_string(const PlanarGraph& g, const Matching& m);

}  // namespace kast
