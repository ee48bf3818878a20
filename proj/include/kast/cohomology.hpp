#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kast/graph.hpp"
#include "kast/numbers.hpp"

namespace kast {

// One term of an integer 1-chain.
struct ChainTerm {
  DirectedEdge edge;
  std::int64_t multiplicity = 1;
};
using Chain = std::vector<ChainTerm>;

Chain to_chain(const std::vector<DirectedEdge>& edges, std::int64_t multiplicity = 1);
Chain to_chain(const Cycle& c);
Chain reversed(Chain chain);
Chain concat(Chain a, const Chain& b);

// Edge labeling with values in (Q/Z) + Z. Stored per undirected edge of the
// parent graph, oriented black -> white; the opposite direction carries the
// negated value.
class Cocycle {
 public:
  Cocycle() = default;
  explicit Cocycle(std::size_t edge_count) : values_(edge_count) {}
  explicit Cocycle(std::vector<Label> values) : values_(std::move(values)) {}

  static Cocycle zero(const PlanarGraph& g) { return Cocycle(g.edge_count()); }

  std::size_t size() const { return values_.size(); }
  const Label& operator[](std::size_t edge) const { return values_[edge]; }
  Label& operator[](std::size_t edge) { return values_[edge]; }
  const std::vector<Label>& values() const { return values_; }

  // Value on a directed edge; throws InputError(unknown_edge) if u, v are not adjacent.
  Label value(const PlanarGraph& g, DirectedEdge d) const;

  friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
  friend Cocycle operator-(const Cocycle& a, const Cocycle& b);
  Cocycle operator-() const;
  friend bool operator==(const Cocycle&, const Cocycle&) = default;

  // Rotation part only (q exponent dropped).
  Cocycle rotation_part() const;

 private:
  std::vector<Label> values_;
};

// 0-cochain: one value per vertex.
using VertexPotential = std::vector<Label>;

Label evaluate(const PlanarGraph& g, const Cocycle& c, const Chain& chain);

// The Z/2 class with k(C) = m + l + 1 (mod 2) on every cycle of length 2l
// enclosing m vertices. Zero on spanning-forest edges; each non-forest edge
// carries the parity its fundamental cycle demands.
Cocycle kasteleyn_class(const PlanarGraph& g);

// Rotation part equal to kasteleyn_class(g); q exponent evaluating to the
// total winding around the hole witnesses, so +1 on every positively oriented
// hole boundary. Throws InputError(missing_holes) without witnesses.
Cocycle kasteleyn_q_class(const PlanarGraph& g);

// Keeps the parent's labels on the induced edges.
Cocycle restrict(const Cocycle& c, const InducedSubgraph& h);

// restrict(k_G, H) - k_H, a Z/2-valued class on H.
Cocycle relative_class(const PlanarGraph& g, const InducedSubgraph& h);
Cocycle relative_class(const Cocycle& k_parent, const InducedSubgraph& h);

// Adds the coboundary of d: edge u -> v gains d(v) - d(u).
Cocycle gauge_transform(const PlanarGraph& g, const Cocycle& c, const VertexPotential& d);

// True when a and b agree on every fundamental cycle, i.e. represent the
// same cohomology class.
bool same_class(const PlanarGraph& g, const Cocycle& a, const Cocycle& b);

// Sum over holes of the winding number of the closed chain around each
// witness. Throws InputError(chain_not_closed) or InputError(missing_holes).
std::int64_t area(const PlanarGraph& g, const Chain& chain);

// `l <black-id> <white-id> rot=<p>/<den> q=<k>` per edge.
std::string to_cocycle_text(const PlanarGraph& g, const Cocycle& c);
// Reads `l` lines, and also labelled `e` lines of a graph file; `v` and `h`
// lines are skipped. Unlisted edges get the zero label.
Cocycle parse_cocycle(std::string_view text, const PlanarGraph& g);

}  // namespace kast
