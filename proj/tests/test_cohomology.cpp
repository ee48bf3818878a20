#include <doctest.h>

#include <random>

#include "kast/cohomology.hpp"
#include "kast/errors.hpp"
#include "kast/matchings.hpp"
#include "support.hpp"

using namespace kast;

namespace {

const Label zero_label{};
const Label half{Angle::half(), 0};

Chain boundary_of(const PlanarGraph& g, std::size_t hole) { return to_chain(g.hole_chain(hole)); }

// Vertices of g outside the vertex set `inside_h` that lie strictly inside
// the polygon of c.
std::size_t enclosed_missing(const PlanarGraph& g, const std::vector<bool>& in_h, const std::vector<Point>& poly) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in_h[v] || on_polygon(poly, g.vertices()[v].pos)) continue;
    n += winding_number(poly, g.vertices()[v].pos) != 0;
  }
  return n;
}

}  // namespace

TEST_CASE("Kasteleyn class on small grids") {
  const PlanarGraph g22 = rectangle_grid(2, 2);
  const Cocycle k22 = kasteleyn_class(g22);
  CHECK(evaluate(g22, k22, boundary_of(g22, 0)) == half);

  const PlanarGraph g33 = rectangle_grid(3, 3);
  const Cocycle k33 = kasteleyn_class(g33);
  // Outer 8-cycle: l = 4, m = 1.
  Chain outer;
  for (std::size_t h = 0; h < g33.holes().size(); ++h) outer = concat(outer, boundary_of(g33, h));
  CHECK(evaluate(g33, k33, outer).rot == Angle());

  const PlanarGraph g23 = rectangle_grid(2, 3);
  const Cocycle k23 = kasteleyn_class(g23);
  REQUIRE(g23.holes().size() == 2);
  for (std::size_t h = 0; h < 2; ++h) CHECK(evaluate(g23, k23, boundary_of(g23, h)) == half);

  for (const Label& l : k33.values()) {
    CHECK(l.qexp == 0);
    CHECK((l.rot == Angle() || l.rot == Angle::half()));
  }
}

TEST_CASE("Kasteleyn class satisfies the parity rule on every simple cycle") {
  for (const auto& fg : kast::testing::fleet()) {
    const PlanarGraph& g = fg.graph;
    const Cocycle k = kasteleyn_class(g);
    for (const Cycle& c : all_simple_cycles(g)) {
      const std::size_t parity = (interior_vertex_count(g, c) + c.half_length() + 1) % 2;
      CHECK_MESSAGE(evaluate(g, k, to_chain(c)).rot == (parity ? Angle::half() : Angle()), fg.name);
    }
  }
}

TEST_CASE("evaluation is linear and antisymmetric") {
  const PlanarGraph g = rectangle_grid(3, 2);
  const Cocycle k = kasteleyn_class(g);
  CHECK(evaluate(g, k, {}) == zero_label);
  const Chain c = boundary_of(g, 0);
  CHECK(evaluate(g, k, concat(c, reversed(c))) == zero_label);
  Chain doubled = c;
  for (auto& t : doubled) t.multiplicity = 2;
  CHECK(evaluate(g, k, doubled) == 2 * evaluate(g, k, c));
  CHECK_THROWS_AS(k.value(g, {0, 0}), InputError);

  const PlanarGraph g22 = rectangle_grid(2, 2);
  const auto ms = enumerate_matchings(g22);
  REQUIRE(ms.size() == 2);
  const Chain diff = concat(matching_chain(g22, ms[1]), matching_chain(g22, ms[0], -1));
  CHECK(evaluate(g22, kasteleyn_class(g22), diff) == half);
}

TEST_CASE("restriction keeps labels") {
  const PlanarGraph g = rectangle_grid(3, 3);
  const Cocycle k = kasteleyn_class(g);
  BalancedSubgraph all{g.whites(), g.blacks()};
  const InducedSubgraph full = induce(g, all);
  CHECK(restrict(k, full) == k);

  const InducedSubgraph edgeless = induce(g, BalancedSubgraph{{g.whites()[0]}, {g.blacks()[3]}});
  CHECK(edgeless.graph.edge_count() == 0);
  CHECK(restrict(k, edgeless).size() == 0);

  // Outer ring: all but the center (2, 2).
  BalancedSubgraph ring;
  for (std::size_t w : g.whites()) {
    if (!(g.vertices()[w].pos == Point{2, 2})) ring.whites.push_back(w);
  }
  ring.blacks = g.blacks();
  const InducedSubgraph h = induce(g, ring);
  REQUIRE(h.graph.edge_count() == 8);
  const auto cycles = fundamental_cycles(h.graph);
  REQUIRE(cycles.size() == 1);
  CHECK(evaluate(h.graph, restrict(k, h), to_chain(cycles[0])).rot == Angle());
  CHECK(evaluate(h.graph, relative_class(g, h), to_chain(cycles[0])) == half);
}

TEST_CASE("relative class counts enclosed missing vertices") {
  for (const auto& fg : kast::testing::fleet()) {
    const PlanarGraph& g = fg.graph;
    const Cocycle kg = kasteleyn_class(g);
    const std::size_t top = std::min(g.n_white(), g.n_black());
    for (std::size_t m = 0; m <= top; ++m) {
      auto it = balanced_subgraphs(g, m);
      BalancedSubgraph b;
      while (it.next(b)) {
        const InducedSubgraph h = induce(g, b);
        const Cocycle p = relative_class(kg, h);
        std::vector<bool> in_h(g.vertex_count(), false);
        for (std::size_t v : h.vertex_to_parent) in_h[v] = true;
        for (const Cycle& c : fundamental_cycles(h.graph)) {
          std::vector<Point> poly;
          for (std::size_t v : c.vertices) poly.push_back(h.graph.vertices()[v].pos);
          const bool odd = enclosed_missing(g, in_h, poly) % 2 == 1;
          CHECK(evaluate(h.graph, p, to_chain(c)).rot == (odd ? Angle::half() : Angle()));
        }
        if (m == top && m == g.n_white() && m == g.n_black()) {
          for (const Label& l : p.values()) CHECK(l == zero_label);
        }
      }
    }
  }
}

TEST_CASE("gauge transformations") {
  const PlanarGraph g = aztec_diamond(2);
  const Cocycle k = kasteleyn_q_class(g);
  CHECK(gauge_transform(g, k, VertexPotential(g.vertex_count())) == k);
  CHECK(gauge_transform(g, k, VertexPotential(g.vertex_count(), Label{Angle(1, 3), 5})) == k);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    VertexPotential d(g.vertex_count());
    for (Label& l : d) l = Label{Angle(static_cast<std::int64_t>(rng() % 12), 12), static_cast<std::int64_t>(rng() % 5) - 2};
    const Cocycle moved = gauge_transform(g, k, d);
    CHECK(same_class(g, moved, k));
    for (const Cycle& c : fundamental_cycles(g)) CHECK(evaluate(g, moved, to_chain(c)) == evaluate(g, k, to_chain(c)));
    VertexPotential back = d;
    for (Label& l : back) l = -l;
    CHECK(gauge_transform(g, moved, back) == k);
  }
  Cocycle other = k;
  other[0].rot += Angle::half();
  CHECK_FALSE(same_class(g, other, k));
}

TEST_CASE("Kasteleyn q-class") {
  const PlanarGraph g22 = rectangle_grid(2, 2);
  CHECK(evaluate(g22, kasteleyn_q_class(g22), boundary_of(g22, 0)) == Label{Angle::half(), 1});

  const PlanarGraph g23 = rectangle_grid(2, 3);
  const Cocycle q23 = kasteleyn_q_class(g23);
  for (std::size_t h = 0; h < 2; ++h) CHECK(evaluate(g23, q23, boundary_of(g23, h)) == Label{Angle::half(), 1});

  for (const PlanarGraph& g : {rectangle_grid(4, 3), aztec_diamond(3), from_ascii("###\n#.#\n###\n"),
                               from_ascii("#####\n#.#.#\n#####\n")}) {
    const Cocycle k = kasteleyn_class(g);
    const Cocycle kq = kasteleyn_q_class(g);
    CHECK(kq.rotation_part() == k);
    for (std::size_t h = 0; h < g.holes().size(); ++h) {
      CHECK(evaluate(g, kq, boundary_of(g, h)) == Label{evaluate(g, k, boundary_of(g, h)).rot, 1});
    }
  }
  CHECK_THROWS_AS(kasteleyn_q_class(kast::testing::load("square_nohole.graph")), InputError);
}

TEST_CASE("areas") {
  const PlanarGraph g = rectangle_grid(2, 2);
  CHECK(area(g, {}) == 0);
  const Chain ccw = boundary_of(g, 0);
  CHECK(area(g, ccw) == 1);
  CHECK(area(g, reversed(ccw)) == -1);
  const auto ms = enumerate_matchings(g);
  const std::int64_t a = area(g, concat(matching_chain(g, ms[1]), matching_chain(g, ms[0], -1)));
  CHECK(std::abs(a) == 1);
  CHECK(area(g, concat(matching_chain(g, ms[0]), matching_chain(g, ms[1], -1))) == -a);
  CHECK_THROWS_AS(area(g, matching_chain(g, ms[0])), InputError);
  CHECK_THROWS_AS(area(kast::testing::load("square_nohole.graph"),
                       to_chain(fundamental_cycles(kast::testing::load("square_nohole.graph"))[0])),
                  InputError);

  const PlanarGraph g33 = rectangle_grid(3, 3);
  Chain sum;
  std::int64_t total = 0;
  for (std::size_t h = 0; h < g33.holes().size(); ++h) {
    total += area(g33, boundary_of(g33, h));
    sum = concat(sum, boundary_of(g33, h));
  }
  CHECK(area(g33, sum) == total);
  CHECK(total == 4);
}

TEST_CASE("cocycle text round trip") {
  const PlanarGraph g = aztec_diamond(2);
  const Cocycle kq = kasteleyn_q_class(g);
  CHECK(parse_cocycle(to_cocycle_text(g, kq), g) == kq);
  const PlanarGraph sq = kast::testing::load("square.graph");
  const Cocycle c = parse_cocycle(kast::testing::read_data("square_class.txt"), sq);
  std::size_t labelled = 0;
  for (const Label& l : c.values()) labelled += !(l == zero_label);
  CHECK(labelled == 1);
  // Labelled edge lines of a graph file.
  const PlanarGraph lab = kast::testing::load("labelled.graph");
  const Cocycle from_graph = parse_cocycle(kast::testing::read_data("labelled.graph"), lab);
  CHECK(from_graph[*lab.edge_between(*lab.index_of(1), *lab.index_of(2))] == Label{Angle(1, 4), 1});
  CHECK_THROWS_AS(parse_cocycle("l 1 4 rot=1/2\n", sq), InputError);
}
