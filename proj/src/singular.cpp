#include "kast/singular.hpp"

#include "kast/errors.hpp"

namespace kast {

const std::vector<SubgraphEntry>& SubgraphCache::level(std::size_t m) {
  auto it = levels_.find(m);
  if (it != levels_.end()) return it->second;
  std::vector<SubgraphEntry> entries;
  if (m <= std::min(g_->n_white(), g_->n_black())) {
    auto subgraphs = balanced_subgraphs(*g_, m);
    BalancedSubgraph h;
    while (subgraphs.next(h)) {
      SubgraphEntry entry{induce(*g_, h), {}, {}};
      entry.matchings = enumerate_matchings(entry.sub.graph);
      // Unmatchable subgraphs contribute nothing.
      if (entry.matchings.empty()) continue;
      entry.k = kasteleyn_class(entry.sub.graph);
      entries.push_back(std::move(entry));
    }
  }
  return levels_.emplace(m, std::move(entries)).first->second;
}

namespace {

Label matching_value(const Cocycle& c, const Matching& mu) {
  Label v;
  for (std::size_t e : mu.edges) v += c[e];
  return v;
}

template <class S>
S signed_by(std::size_t m, S x) {
  return m % 2 == 0 ? x : -x;
}

Chain parent_chain(const SubgraphEntry& entry, const Matching& mu, std::int64_t mult) {
  Chain out;
  for (std::size_t e : mu.edges) {
    const Edge& edge = entry.sub.graph.edges()[e];
    out.push_back({{entry.sub.vertex_to_parent[edge.black], entry.sub.vertex_to_parent[edge.white]}, mult});
  }
  return out;
}

}  // namespace

template <class Backend>
typename Backend::Scalar coeff_by_subgraphs(SubgraphCache& cache, const Cocycle& c, std::size_t m,
                                            const Backend& backend) {
  using S = typename Backend::Scalar;
  S total = Ring<S>::zero();
  for (const SubgraphEntry& entry : cache.level(m)) {
    const Cocycle a = restrict(c, entry.sub) + entry.k;
    // delta as a squared modulus, based at the first matching.
    S sum = Ring<S>::zero();
    const Label base = matching_value(a, entry.matchings.front());
    for (const Matching& mu : entry.matchings) sum += backend.eta(matching_value(a, mu) - base);
    total += sum * Ring<S>::conj(sum);
  }
  return signed_by(m, total);
}

template <class Backend>
typename Backend::Scalar coeff_by_pipes(SubgraphCache& cache, const Cocycle& c, std::size_t m, PipeMode mode,
                                        const Backend& backend) {
  using S = typename Backend::Scalar;
  const PlanarGraph& g = cache.graph();
  if (mode == PipeMode::q && !g.has_witnesses()) {
    throw InputError(InputErrorCode::missing_holes, "q-mode needs every hole declared with a witness");
  }
  const Cocycle k_parent = mode == PipeMode::generalized ? Cocycle{} : kasteleyn_class(g);
  S total = Ring<S>::zero();
  for (const SubgraphEntry& entry : cache.level(m)) {
    const Cocycle label = mode == PipeMode::generalized ? restrict(c, entry.sub) + entry.k
                                                        : relative_class(k_parent, entry.sub);
    for (const Matching& first : entry.matchings) {
      for (const Matching& second : entry.matchings) {
        Label value = matching_value(label, second) - matching_value(label, first);
        if (mode == PipeMode::q) {
          value.qexp = area(g, concat(parent_chain(entry, second, 1), parent_chain(entry, first, -1)));
        }
        total += backend.eta(value);
      }
    }
  }
  return signed_by(m, total);
}

template GaussLaurent coeff_by_subgraphs(SubgraphCache&, const Cocycle&, std::size_t, const ExactBackend&);
template Complex coeff_by_subgraphs(SubgraphCache&, const Cocycle&, std::size_t, const FloatBackend&);
template GaussLaurent coeff_by_pipes(SubgraphCache&, const Cocycle&, std::size_t, PipeMode, const ExactBackend&);
template Complex coeff_by_pipes(SubgraphCache&, const Cocycle&, std::size_t, PipeMode, const FloatBackend&);

}  // namespace kast
