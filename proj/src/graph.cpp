#include "kast/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "kast/errors.hpp"

namespace kast {

const char* to_string(InputErrorCode code) {
  switch (code) {
    case InputErrorCode::syntax: return "syntax error";
    case InputErrorCode::bipartite_violation: return "bipartite violation";
    case InputErrorCode::crossing_edges: return "crossing edges";
    case InputErrorCode::dangling_id: return "dangling id";
    case InputErrorCode::duplicate_id: return "duplicate id";
    case InputErrorCode::bad_hole: return "bad hole";
    case InputErrorCode::witness_outside: return "witness outside hole";
    case InputErrorCode::empty_region: return "empty region";
    case InputErrorCode::bad_character: return "bad character";
    case InputErrorCode::not_a_cycle: return "not a cycle";
    case InputErrorCode::unknown_edge: return "unknown edge";
    case InputErrorCode::missing_holes: return "missing holes";
    case InputErrorCode::chain_not_closed: return "chain not closed";
  }
  return "input error";
}

PlanarGraph::PlanarGraph(std::vector<Vertex> vertices,
                         const std::vector<std::pair<int, int>>& edges,
                         const std::vector<HoleSpec>& holes) {
  build(std::move(vertices), edges, holes, true);
}

PlanarGraph PlanarGraph::trusted(std::vector<Vertex> vertices,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<HoleSpec>& holes) {
  PlanarGraph g;
  g.build(std::move(vertices), edges, holes, false);
  return g;
}

void PlanarGraph::build(std::vector<Vertex> vertices,
                        const std::vector<std::pair<int, int>>& edges,
                        const std::vector<HoleSpec>& holes, bool check) {
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].id == vertices[i - 1].id) {
      throw InputError(InputErrorCode::duplicate_id,
                       "vertex id " + std::to_string(vertices[i].id) + " declared twice");
    }
  }
  vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    (is_white(i) ? whites_ : blacks_).push_back(i);
  }

  auto require = [this](int id) {
    auto idx = index_of(id);
    if (!idx) throw InputError(InputErrorCode::dangling_id, "unknown vertex id " + std::to_string(id));
    return *idx;
  };

  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  keyed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const std::size_t u = require(a);
    const std::size_t v = require(b);
    if (vertices_[u].color == vertices_[v].color) {
      throw InputError(InputErrorCode::bipartite_violation,
                       "edge " + std::to_string(a) + "-" + std::to_string(b) +
                           " joins two vertices of the same color");
    }
    keyed.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(keyed.begin(), keyed.end());
  if (std::adjacent_find(keyed.begin(), keyed.end()) != keyed.end()) {
    throw InputError(InputErrorCode::duplicate_id, "edge declared twice");
  }
  adjacency_.assign(vertices_.size(), {});
  for (const auto& [u, v] : keyed) {
    const std::size_t e = edges_.size();
    edges_.push_back(is_white(u) ? Edge{v, u} : Edge{u, v});
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }

  if (check) check_drawing();

  for (const HoleSpec& spec : holes) {
    Hole hole;
    for (const auto& walk_ids : spec.walks) {
      if (walk_ids.size() < 2) throw InputError(InputErrorCode::bad_hole, "hole walk too short");
      std::vector<std::size_t> walk;
      for (int id : walk_ids) walk.push_back(require(id));
      for (std::size_t i = 0; i < walk.size(); ++i) {
        if (!edge_between(walk[i], walk[(i + 1) % walk.size()])) {
          throw InputError(InputErrorCode::bad_hole,
                           "hole boundary step " + std::to_string(vertices_[walk[i]].id) + " -> " +
                               std::to_string(vertices_[walk[(i + 1) % walk.size()]].id) +
                               " is not an edge");
        }
      }
      hole.walks.push_back(std::move(walk));
    }
    if (hole.walks.empty()) throw InputError(InputErrorCode::bad_hole, "empty hole boundary");
    hole.witness = spec.witness;
    holes_.push_back(std::move(hole));
    if (!spec.witness) continue;
    const Point& w = *spec.witness;
    for (const Vertex& v : vertices_) {
      if (v.pos == w) throw InputError(InputErrorCode::witness_outside, "witness lies on a vertex");
    }
    for (const Edge& e : edges_) {
      if (on_segment(w, vertices_[e.black].pos, vertices_[e.white].pos)) {
        throw InputError(InputErrorCode::witness_outside, "witness lies on an edge");
      }
    }
    int winding = 0;
    for (const DirectedEdge& d : hole_chain(holes_.size() - 1)) {
      winding += winding_contribution(vertices_[d.from].pos, vertices_[d.to].pos, w);
    }
    if (winding != 1) {
      throw InputError(InputErrorCode::witness_outside,
                       "witness not strictly inside its counterclockwise hole boundary (winding " +
                           std::to_string(winding) + ")");
    }
  }
}

void PlanarGraph::check_drawing() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (vertices_[i].pos == vertices_[j].pos) {
        throw InputError(InputErrorCode::crossing_edges,
                         "vertices " + std::to_string(vertices_[i].id) + " and " +
                             std::to_string(vertices_[j].id) + " coincide");
      }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Point& a = vertices_[edges_[e].black].pos;
    const Point& b = vertices_[edges_[e].white].pos;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (v == edges_[e].black || v == edges_[e].white) continue;
      if (on_segment(vertices_[v].pos, a, b)) {
        throw InputError(InputErrorCode::crossing_edges,
                         "vertex " + std::to_string(vertices_[v].id) + " lies on a non-incident edge");
      }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (std::size_t f = e + 1; f < edges_.size(); ++f) {
      const Edge& x = edges_[e];
      const Edge& y = edges_[f];
      const Point& a = vertices_[x.black].pos;
      const Point& b = vertices_[x.white].pos;
      const Point& c = vertices_[y.black].pos;
      const Point& d = vertices_[y.white].pos;
      // Edges sharing an endpoint can only overlap along a common ray, which
      // puts a vertex on a non-incident edge (caught above).
      if (x.black == y.black || x.white == y.white) continue;
      if (segments_intersect(a, b, c, d)) {
        throw InputError(InputErrorCode::crossing_edges,
                         "edges " + std::to_string(vertices_[x.black].id) + "-" +
                             std::to_string(vertices_[x.white].id) + " and " +
                             std::to_string(vertices_[y.black].id) + "-" +
                             std::to_string(vertices_[y.white].id) + " cross");
      }
    }
  }
}

std::optional<std::size_t> PlanarGraph::index_of(int id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, int key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> PlanarGraph::edge_between(std::size_t u, std::size_t v) const {
  for (const Adjacent& a : adjacency_[u]) {
    if (a.vertex == v) return a.edge;
  }
  return std::nullopt;
}

std::size_t PlanarGraph::component_count() const {
  std::vector<std::size_t> root(vertices_.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::size_t count = vertices_.size();
  for (const Edge& e : edges_) {
    const std::size_t a = find(e.black);
    const std::size_t b = find(e.white);
    if (a != b) {
      root[a] = b;
      --count;
    }
  }
  return count;
}

bool PlanarGraph::has_witnesses() const {
  const std::size_t rank = edges_.size() + component_count() - vertices_.size();
  if (rank > 0 && holes_.empty()) return false;
  return std::all_of(holes_.begin(), holes_.end(), [](const Hole& h) { return h.witness.has_value(); });
}

std::vector<DirectedEdge> PlanarGraph::hole_chain(std::size_t hole) const {
  std::vector<DirectedEdge> chain;
  for (const auto& walk : holes_.at(hole).walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) chain.push_back({walk[i], walk[(i + 1) % walk.size()]});
  }
  return chain;
}

std::vector<DirectedEdge> Cycle::chain() const {
  std::vector<DirectedEdge> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.push_back({vertices[i], vertices[(i + 1) % vertices.size()]});
  }
  return out;
}

Cycle Cycle::reversed() const {
  Cycle c{vertices};
  std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

SpanningForest::SpanningForest(const PlanarGraph& g)
    : parent(g.vertex_count()),
      parent_edge(g.vertex_count()),
      depth(g.vertex_count(), 0),
      in_forest(g.edge_count(), false) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Adjacent& a : g.neighbors(u)) {
        if (seen[a.vertex]) continue;
        seen[a.vertex] = true;
        parent[a.vertex] = u;
        parent_edge[a.vertex] = a.edge;
        depth[a.vertex] = depth[u] + 1;
        in_forest[a.edge] = true;
        queue.push_back(a.vertex);
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!in_forest[e]) non_forest_edges.push_back(e);
  }
}

Cycle SpanningForest::cycle_of(const PlanarGraph& g, std::size_t edge) const {
  const Edge& e = g.edges().at(edge);
  // Walk both endpoints up to their lowest common ancestor.
  std::vector<std::size_t> from_white{e.white};
  std::vector<std::size_t> from_black{e.black};
  std::size_t a = e.white;
  std::size_t b = e.black;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      a = *parent[a];
      from_white.push_back(a);
    } else {
      b = *parent[b];
      from_black.push_back(b);
    }
  }
  // black -> white -> ... -> lca -> ... -> (back towards black)
  Cycle c;
  c.vertices.push_back(e.black);
  c.vertices.insert(c.vertices.end(), from_white.begin(), from_white.end());
  for (std::size_t i = from_black.size() - 1; i-- > 1;) c.vertices.push_back(from_black[i]);
  return c;
}

std::vector<Cycle> fundamental_cycles(const PlanarGraph& g) {
  SpanningForest forest(g);
  std::vector<Cycle> out;
  out.reserve(forest.non_forest_edges.size());
  for (std::size_t e : forest.non_forest_edges) out.push_back(forest.cycle_of(g, e));
  return out;
}

std::size_t interior_vertex_count(const PlanarGraph& g, const Cycle& c) {
  std::vector<Point> poly;
  poly.reserve(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) {
    const std::size_t v = c.vertices[i];
    if (v >= g.vertex_count()) throw InputError(InputErrorCode::not_a_cycle, "vertex out of range");
    if (!g.edge_between(v, c.vertices[(i + 1) % c.length()])) {
      throw InputError(InputErrorCode::not_a_cycle, "cycle step is not an edge");
    }
    poly.push_back(g.vertices()[v].pos);
  }
  if (!is_simple_polygon(poly)) throw InputError(InputErrorCode::not_a_cycle, "polygon is not simple");
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (std::size_t v : c.vertices) on_cycle[v] = true;
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    const Point& p = g.vertices()[v].pos;
    if (on_polygon(poly, p)) continue;
    if (winding_number(poly, p) != 0) ++count;
  }
  return count;
}

std::vector<Cycle> all_simple_cycles(const PlanarGraph& g) {
  std::vector<Cycle> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    // Depth-first search over vertices > s, closing back at s.
    auto dfs = [&](auto&& self, std::size_t u) -> void {
      for (const Adjacent& a : g.neighbors(u)) {
        const std::size_t v = a.vertex;
        if (v == s && path.size() >= 3 && path[1] < path.back()) {
          out.push_back(Cycle{path});
        } else if (v > s && !on_path[v]) {
          on_path[v] = true;
          path.push_back(v);
          self(self, v);
          path.pop_back();
          on_path[v] = false;
        }
      }
    };
    path.assign(1, s);
    on_path[s] = true;
    dfs(dfs, s);
    on_path[s] = false;
  }
  return out;
}

InducedSubgraph induce(const PlanarGraph& g, const BalancedSubgraph& h) {
  std::vector<std::size_t> vs = h.whites;
  vs.insert(vs.end(), h.blacks.begin(), h.blacks.end());
  return induce(g, std::move(vs));
}

InducedSubgraph induce(const PlanarGraph& g, std::vector<std::size_t> vertex_indices) {
  std::sort(vertex_indices.begin(), vertex_indices.end());
  vertex_indices.erase(std::unique(vertex_indices.begin(), vertex_indices.end()), vertex_indices.end());
  std::vector<bool> keep(g.vertex_count(), false);
  std::vector<Vertex> vertices;
  for (std::size_t v : vertex_indices) {
    keep[v] = true;
    vertices.push_back(g.vertices()[v]);
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.black] && keep[e.white]) {
      edges.emplace_back(g.vertices()[e.black].id, g.vertices()[e.white].id);
    }
  }
  InducedSubgraph out{PlanarGraph::trusted(std::move(vertices), edges), std::move(vertex_indices), {}};
  // Sub-indices follow parent order, so edge order is inherited as well.
  for (const Edge& e : out.graph.edges()) {
    out.edge_to_parent.push_back(
        *g.edge_between(out.vertex_to_parent[e.black], out.vertex_to_parent[e.white]));
  }
  return out;
}

BalancedSubgraphs::BalancedSubgraphs(const PlanarGraph& g, std::size_t m) : graph_(&g), m_(m) {
  if (m > g.n_white() || m > g.n_black()) done_ = true;
}

namespace {

// Advances a combination (ascending positions in [0, n)); false when exhausted.
bool next_combination(std::vector<std::size_t>& pos, std::size_t n) {
  const std::size_t k = pos.size();
  for (std::size_t i = k; i-- > 0;) {
    if (pos[i] < n - k + i) {
      ++pos[i];
      for (std::size_t j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool BalancedSubgraphs::next(BalancedSubgraph& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    white_pos_.resize(m_);
    black_pos_.resize(m_);
    std::iota(white_pos_.begin(), white_pos_.end(), 0);
    std::iota(black_pos_.begin(), black_pos_.end(), 0);
  } else if (!next_combination(black_pos_, graph_->n_black())) {
    if (!next_combination(white_pos_, graph_->n_white())) {
      done_ = true;
      return false;
    }
    std::iota(black_pos_.begin(), black_pos_.end(), 0);
  }
  out.whites.clear();
  out.blacks.clear();
  for (std::size_t p : white_pos_) out.whites.push_back(graph_->whites()[p]);
  for (std::size_t p : black_pos_) out.blacks.push_back(graph_->blacks()[p]);
  return true;
}

std::vector<BalancedSubgraph> BalancedSubgraphs::collect() {
  std::vector<BalancedSubgraph> all;
  BalancedSubgraph h;
  while (next(h)) all.push_back(h);
  return all;
}

BalancedSubgraphs balanced_subgraphs(const PlanarGraph& g, std::size_t m) { return {g, m}; }

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::string describe(const PlanarGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " vertices (" << g.n_white() << " white, " << g.n_black()
     << " black), " << g.edge_count() << " edges, " << g.holes().size() << (g.holes().size() == 1 ? " hole" : " holes");
  return os.str();
}

}  // namespace kast
