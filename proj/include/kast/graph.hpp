#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kast/geometry.hpp"

namespace kast {

enum class Color : std::uint8_t { white, black };

struct Vertex {
  int id = 0;
  Point pos;
  Color color = Color::white;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Undirected edge, stored by vertex index with the black endpoint first.
struct Edge {
  std::size_t black = 0;
  std::size_t white = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DirectedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// A bounded complement component. `walks` are closed vertex walks (vertex
// indices) whose sum is the positively oriented boundary; usually one walk.
struct Hole {
  std::vector<std::vector<std::size_t>> walks;
  std::optional<Point> witness;
  friend bool operator==(const Hole&, const Hole&) = default;
};

// Hole description in terms of vertex ids, as read from a graph file.
struct HoleSpec {
  std::vector<std::vector<int>> walks;
  std::optional<Point> witness;
};

struct Adjacent {
  std::size_t vertex;
  std::size_t edge;
  friend bool operator==(const Adjacent&, const Adjacent&) = default;
};

// Bipartite graph with a straight-line planar drawing at exact rational
// coordinates. Vertices are kept sorted by id, so index order is id order.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  // Validates every invariant (bipartite, ids, crossings, holes) and throws
  // InputError on the first violation.
  PlanarGraph(std::vector<Vertex> vertices, const std::vector<std::pair<int, int>>& edges,
              const std::vector<HoleSpec>& holes = {});

  // For builders whose output is valid by construction: checks ids and
  // bipartiteness but skips the quadratic crossing test.
  static PlanarGraph trusted(std::vector<Vertex> vertices,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<HoleSpec>& holes = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Hole>& holes() const { return holes_; }
  const std::vector<Adjacent>& neighbors(std::size_t v) const { return adjacency_[v]; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // White / black vertex indices in ascending id order.
  const std::vector<std::size_t>& whites() const { return whites_; }
  const std::vector<std::size_t>& blacks() const { return blacks_; }
  std::size_t n_white() const { return whites_.size(); }
  std::size_t n_black() const { return blacks_.size(); }
  bool is_white(std::size_t v) const { return vertices_[v].color == Color::white; }

  std::optional<std::size_t> index_of(int id) const;
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
  std::size_t component_count() const;

  // Every declared hole carries a witness, and holes are declared whenever
  // the graph has a cycle.
  bool has_witnesses() const;
  // Directed edges of the hole boundary.
  std::vector<DirectedEdge> hole_chain(std::size_t hole) const;

  friend bool operator==(const PlanarGraph&, const PlanarGraph&) = default;

 private:
  void build(std::vector<Vertex> vertices, const std::vector<std::pair<int, int>>& edges,
             const std::vector<HoleSpec>& holes, bool check_drawing);
  void check_drawing() const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Hole> holes_;
  std::vector<std::vector<Adjacent>> adjacency_;
  std::vector<std::size_t> whites_;
  std::vector<std::size_t> blacks_;
};

// Simple closed polygon along edges: vertices[i] -> vertices[i+1], closing
// back to vertices[0].
struct Cycle {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size(); }
  std::size_t half_length() const { return vertices.size() / 2; }
  std::vector<DirectedEdge> chain() const;
  Cycle reversed() const;
};

// Spanning forest by breadth-first search from each unvisited vertex in
// index order.
struct SpanningForest {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<bool> in_forest;  // indexed by edge
  std::vector<std::size_t> non_forest_edges;

  explicit SpanningForest(const PlanarGraph& g);
  // The fundamental cycle of a non-forest edge, traversed black -> white
  // along that edge and closed through the forest.
  Cycle cycle_of(const PlanarGraph& g, std::size_t edge) const;
};

// One cycle per non-forest edge, in edge order.
std::vector<Cycle> fundamental_cycles(const PlanarGraph& g);

// Number of vertices of g strictly inside the polygon of c. Throws
// InputError(not_a_cycle) if c is not a simple polygon along edges of g.
std::size_t interior_vertex_count(const PlanarGraph& g, const Cycle& c);

// Every simple cycle of g, each once (as a vertex sequence starting at its
// smallest index). Exponential; intended for graphs of test size.
std::vector<Cycle> all_simple_cycles(const PlanarGraph& g);

// m white and m black vertices (parent indices, ascending).
struct BalancedSubgraph {
  std::vector<std::size_t> whites;
  std::vector<std::size_t> blacks;
  friend bool operator==(const BalancedSubgraph&, const BalancedSubgraph&) = default;
};

// An induced subgraph drawn with the parent's coordinates and ids, plus the
// index maps back into the parent. Declares no holes.
struct InducedSubgraph {
  PlanarGraph graph;
  std::vector<std::size_t> vertex_to_parent;
  std::vector<std::size_t> edge_to_parent;
};

InducedSubgraph induce(const PlanarGraph& g, const BalancedSubgraph& h);
InducedSubgraph induce(const PlanarGraph& g, std::vector<std::size_t> vertex_indices);

// Lexicographic enumeration over (white set, black set): the black set varies
// fastest. Yields C(n, m) * C(n', m) subgraphs.
class BalancedSubgraphs {
 public:
  BalancedSubgraphs(const PlanarGraph& g, std::size_t m);

  bool next(BalancedSubgraph& out);
  std::vector<BalancedSubgraph> collect();

 private:
  const PlanarGraph* graph_;
  std::size_t m_;
  std::vector<std::size_t> white_pos_;
  std::vector<std::size_t> black_pos_;
  bool started_ = false;
  bool done_ = false;
};

BalancedSubgraphs balanced_subgraphs(const PlanarGraph& g, std::size_t m);
Integer binomial(std::size_t n, std::size_t k);

// Builders.
PlanarGraph rectangle_grid(int rows, int cols);
PlanarGraph aztec_diamond(int order);
PlanarGraph from_ascii(std::string_view region);

// Graph file format.
PlanarGraph parse_graph(std::string_view text);
std::string to_graph_text(const PlanarGraph& g);

std::string describe(const PlanarGraph& g);

}  // namespace kast
