#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kast/cohomology.hpp"
#include "kast/graph.hpp"
#include "kast/matchings.hpp"
#include "kast/poly.hpp"

namespace kast {

// Rows: whites by ascending id. Columns: blacks by ascending id.
// Entry (i, j) = eta(c on black j -> white i), zero off the edges.
template <class Backend>
Matrix<typename Backend::Scalar> build_matrix(const PlanarGraph& g, const Cocycle& c, const Backend& backend = {}) {
  if (c.size() != g.edge_count()) throw std::invalid_argument("cocycle does not match the graph");
  using S = typename Backend::Scalar;
  std::vector<std::size_t> row(g.vertex_count()), col(g.vertex_count());
  for (std::size_t i = 0; i < g.n_white(); ++i) row[g.whites()[i]] = i;
  for (std::size_t j = 0; j < g.n_black(); ++j) col[g.blacks()[j]] = j;
  Matrix<S> a(g.n_white(), g.n_black());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    a(row[g.edges()[e].white], col[g.edges()[e].black]) = backend.eta(c[e]);
  }
  return a;
}

// charpoly(A A^dagger), degree n.
template <class Backend>
Poly<typename Backend::Scalar> singular_polynomial(const PlanarGraph& g, const Cocycle& c, const Backend& backend = {}) {
  return charpoly(gram(build_matrix(g, c, backend)));
}

// Balanced subgraphs of one size, each with its own Kasteleyn class and
// perfect matchings (in subgraph edge indices). Built on first use.
struct SubgraphEntry {
  InducedSubgraph sub;
  Cocycle k;
  std::vector<Matching> matchings;
};

class SubgraphCache {
 public:
  explicit SubgraphCache(const PlanarGraph& g) : g_(&g) {}
  SubgraphCache(PlanarGraph&&) = delete;
  const PlanarGraph& graph() const { return *g_; }
  const std::vector<SubgraphEntry>& level(std::size_t m);

 private:
  const PlanarGraph* g_;
  std::map<std::size_t, std::vector<SubgraphEntry>> levels_;
};

// (-1)^m sum_H delta(c|H + k_H, H) over balanced subgraphs with 2m vertices.
template <class Backend>
typename Backend::Scalar coeff_by_subgraphs(SubgraphCache& cache, const Cocycle& c, std::size_t m,
                                            const Backend& backend = {});

enum class PipeMode { generalized, kasteleyn, q };

// Signed sum over pipe systems nu of size m:
//   generalized  eta((c|nu + k_nu)(nu))
//   kasteleyn    eta(p(nu)), c is ignored
//   q            eta(p(nu)) q^A(nu), c is ignored; needs hole witnesses
template <class Backend>
typename Backend::Scalar coeff_by_pipes(SubgraphCache& cache, const Cocycle& c, std::size_t m, PipeMode mode,
                                        const Backend& backend = {});

// Coefficient of t^(n-m), i.e. k_m.
template <class S>
S coefficient_km(const Poly<S>& p, std::size_t n, std::size_t m) {
  return m <= n ? p.coefficient(n - m) : Ring<S>::zero();
}

}  // namespace kast
