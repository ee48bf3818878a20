#include "kast/matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace kast {

Chain matching_chain(const PlanarGraph& g, const Matching& m, std::int64_t multiplicity) {
  Chain out;
  out.reserve(m.edges.size());
  for (std::size_t e : m.edges) out.push_back({{g.edges()[e].black, g.edges()[e].white}, multiplicity});
  return out;
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const PlanarGraph& g, const std::function<bool(const Matching&)>& visit)
      : g_(g), visit_(visit), covered_(g.vertex_count(), false) {}

  void run() {
    if (g_.n_white() != g_.n_black()) return;
    recurse(g_.vertex_count());
  }

 private:
  // Returns false once the visitor asks to stop.
  bool recurse(std::size_t uncovered) {
    if (uncovered == 0) {
      Matching m{chosen_};
      std::sort(m.edges.begin(), m.edges.end());
      return visit_(m);
    }
    std::size_t pivot = g_.vertex_count();
    std::size_t best = g_.vertex_count() + 1;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (covered_[v]) continue;
      std::size_t degree = 0;
      for (const Adjacent& a : g_.neighbors(v)) degree += !covered_[a.vertex];
      if (degree == 0) return true;
      if (degree < best) {
        best = degree;
        pivot = v;
      }
    }
    covered_[pivot] = true;
    for (const Adjacent& a : g_.neighbors(pivot)) {
      if (covered_[a.vertex]) continue;
      covered_[a.vertex] = true;
      chosen_.push_back(a.edge);
      const bool go_on = recurse(uncovered - 2);
      chosen_.pop_back();
      covered_[a.vertex] = false;
      if (!go_on) {
        covered_[pivot] = false;
        return false;
      }
    }
    covered_[pivot] = false;
    return true;
  }

  const PlanarGraph& g_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<bool> covered_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_matching(const PlanarGraph& g, const std::function<bool(const Matching&)>& visit) {
  MatchingSearch(g, visit).run();
}

std::vector<Matching> enumerate_matchings(const PlanarGraph& g) {
  std::vector<Matching> out;
  for_each_matching(g, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_matchings(const PlanarGraph& g) {
  std::size_t n = 0;
  for_each_matching(g, [&](const Matching&) {
    ++n;
    return true;
  });
  return n;
}

int permutation_parity(const PlanarGraph& g, const Matching& m1, const Matching& m2) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  // partner_k[v]: the vertex matched to v by m_k.
  auto partners = [&](const Matching& m) {
    std::vector<std::size_t> p(g.vertex_count(), none);
    for (std::size_t e : m.edges) {
      const Edge& edge = g.edges().at(e);
      if (p[edge.white] != none || p[edge.black] != none) {
        throw std::invalid_argument("edge set is not a matching");
      }
      p[edge.white] = edge.black;
      p[edge.black] = edge.white;
    }
    return p;
  };
  const auto p1 = partners(m1);
  const auto p2 = partners(m2);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if ((p1[v] == none) != (p2[v] == none)) throw std::invalid_argument("matchings have different supports");
  }
  // Permutation of the whites: w -> m1^{-1}(m2(w)).
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t transpositions = 0;
  for (std::size_t w : g.whites()) {
    if (seen[w] || p1[w] == none) continue;
    std::size_t length = 0;
    for (std::size_t x = w; !seen[x]; x = p1[p2[x]]) {
      seen[x] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Chain PipeSystem::chain(const PlanarGraph& g) const {
  return concat(matching_chain(g, second), matching_chain(g, first, -1));
}

void for_each_pipe_system(const PlanarGraph& g, std::size_t size,
                          const std::function<void(const PipeSystem&, const InducedSubgraph&)>& visit) {
  auto subgraphs = balanced_subgraphs(g, size);
  BalancedSubgraph h;
  while (subgraphs.next(h)) {
    const InducedSubgraph sub = induce(g, h);
    std::vector<Matching> local = enumerate_matchings(sub.graph);
    for (Matching& m : local) {
      for (std::size_t& e : m.edges) e = sub.edge_to_parent[e];
      std::sort(m.edges.begin(), m.edges.end());
    }
    for (const Matching& a : local) {
      for (const Matching& b : local) visit(PipeSystem{h, a, b}, sub);
    }
  }
}

std::vector<PipeSystem> pipe_systems(const PlanarGraph& g, std::size_t size) {
  std::vector<PipeSystem> out;
  for_each_pipe_system(g, size, [&](const PipeSystem& p, const InducedSubgraph&) { out.push_back(p); });
  return out;
}

std::vector<PipeSystem> all_pipe_systems(const PlanarGraph& g) {
  std::vector<PipeSystem> out;
  for (std::size_t m = 0; m <= std::min(g.n_white(), g.n_black()); ++m) {
    auto part = pipe_systems(g, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string to_string(const PlanarGraph& g, const Matching& m) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t e : m.edges) {
    pairs.emplace_back(g.vertices()[g.edges()[e].white].id, g.vertices()[g.edges()[e].black].id);
  }
  std::sort(pairs.begin(), pairs.end());
  std::string s;
  for (const auto& [w, b] : pairs) {
    if (!s.empty()) s += ",";
    s += std::to_string(w) + "-" + std::to_string(b);
  }
  return s;
}

}  // namespace kast
