#include "kast/cohomology.hpp"

#include <charconv>
#include <sstream>

#include "kast/errors.hpp"

namespace kast {

Chain to_chain(const std::vector<DirectedEdge>& edges, std::int64_t multiplicity) {
  Chain out;
  out.reserve(edges.size());
  for (const DirectedEdge& d : edges) out.push_back({d, multiplicity});
  return out;
}

Chain to_chain(const Cycle& c) { return to_chain(c.chain()); }

Chain reversed(Chain chain) {
  for (ChainTerm& t : chain) t.multiplicity = -t.multiplicity;
  return chain;
}

Chain concat(Chain a, const Chain& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Label Cocycle::value(const PlanarGraph& g, DirectedEdge d) const {
  if (d.from >= g.vertex_count() || d.to >= g.vertex_count()) {
    throw InputError(InputErrorCode::unknown_edge, "vertex index out of range");
  }
  const auto e = g.edge_between(d.from, d.to);
  if (!e) {
    throw InputError(InputErrorCode::unknown_edge,
                     "no edge " + std::to_string(g.vertices()[d.from].id) + "-" +
                         std::to_string(g.vertices()[d.to].id));
  }
  const Label& v = values_.at(*e);
  return g.edges()[*e].black == d.from ? v : -v;
}

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cocycles on different edge sets");
  Cocycle out = a;
  for (std::size_t e = 0; e < a.size(); ++e) out.values_[e] += b.values_[e];
  return out;
}

Cocycle operator-(const Cocycle& a, const Cocycle& b) { return a + (-b); }

Cocycle Cocycle::operator-() const {
  Cocycle out = *this;
  for (Label& l : out.values_) l = -l;
  return out;
}

Cocycle Cocycle::rotation_part() const {
  Cocycle out = *this;
  for (Label& l : out.values_) l.qexp = 0;
  return out;
}

Label evaluate(const PlanarGraph& g, const Cocycle& c, const Chain& chain) {
  Label sum;
  for (const ChainTerm& t : chain) sum += t.multiplicity * c.value(g, t.edge);
  return sum;
}

Cocycle kasteleyn_class(const PlanarGraph& g) {
  SpanningForest forest(g);
  Cocycle k = Cocycle::zero(g);
  for (std::size_t e : forest.non_forest_edges) {
    const Cycle cycle = forest.cycle_of(g, e);
    const std::size_t m = interior_vertex_count(g, cycle);
    const std::size_t l = cycle.half_length();
    if ((m + l + 1) % 2 == 1) k[e].rot = Angle::half();
  }
  return k;
}

Cocycle kasteleyn_q_class(const PlanarGraph& g) {
  if (!g.has_witnesses()) {
    throw InputError(InputErrorCode::missing_holes, "q-class needs every hole declared with a witness");
  }
  SpanningForest forest(g);
  Cocycle k = Cocycle::zero(g);
  for (std::size_t e : forest.non_forest_edges) {
    const Cycle cycle = forest.cycle_of(g, e);
    const std::size_t m = interior_vertex_count(g, cycle);
    if ((m + cycle.half_length() + 1) % 2 == 1) k[e].rot = Angle::half();
    std::vector<Point> poly;
    for (std::size_t v : cycle.vertices) poly.push_back(g.vertices()[v].pos);
    std::int64_t winding = 0;
    for (const Hole& h : g.holes()) winding += winding_number(poly, *h.witness);
    k[e].qexp = winding;
  }
  return k;
}

Cocycle restrict(const Cocycle& c, const InducedSubgraph& h) {
  Cocycle out(h.edge_to_parent.size());
  for (std::size_t e = 0; e < h.edge_to_parent.size(); ++e) out[e] = c[h.edge_to_parent[e]];
  return out;
}

Cocycle relative_class(const Cocycle& k_parent, const InducedSubgraph& h) {
  return restrict(k_parent, h) - kasteleyn_class(h.graph);
}

Cocycle relative_class(const PlanarGraph& g, const InducedSubgraph& h) {
  return relative_class(kasteleyn_class(g), h);
}

Cocycle gauge_transform(const PlanarGraph& g, const Cocycle& c, const VertexPotential& d) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("potential must cover every vertex");
  Cocycle out = c;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    out[e] += d[edge.white] - d[edge.black];
  }
  return out;
}

bool same_class(const PlanarGraph& g, const Cocycle& a, const Cocycle& b) {
  if (a.size() != g.edge_count() || b.size() != g.edge_count()) return false;
  for (const Cycle& c : fundamental_cycles(g)) {
    if (!(evaluate(g, a, to_chain(c)) == evaluate(g, b, to_chain(c)))) return false;
  }
  return true;
}

std::int64_t area(const PlanarGraph& g, const Chain& chain) {
  std::vector<std::int64_t> boundary(g.vertex_count(), 0);
  for (const ChainTerm& t : chain) {
    if (!g.edge_between(t.edge.from, t.edge.to)) {
      throw InputError(InputErrorCode::unknown_edge, "chain uses a non-edge");
    }
    boundary[t.edge.to] += t.multiplicity;
    boundary[t.edge.from] -= t.multiplicity;
  }
  for (std::int64_t b : boundary) {
    if (b != 0) throw InputError(InputErrorCode::chain_not_closed, "chain has non-zero boundary");
  }
  if (chain.empty()) return 0;
  if (!g.has_witnesses()) throw InputError(InputErrorCode::missing_holes, "area needs hole witnesses");
  std::int64_t total = 0;
  for (const Hole& h : g.holes()) {
    for (const ChainTerm& t : chain) {
      total += t.multiplicity *
               winding_contribution(g.vertices()[t.edge.from].pos, g.vertices()[t.edge.to].pos, *h.witness);
    }
  }
  return total;
}

std::string to_cocycle_text(const PlanarGraph& g, const Cocycle& c) {
  std::ostringstream os;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    os << "l " << g.vertices()[g.edges()[e].black].id << " " << g.vertices()[g.edges()[e].white].id
       << " rot=" << to_string(c[e].rot) << " q=" << c[e].qexp << "\n";
  }
  return os.str();
}

Cocycle parse_cocycle(std::string_view text, const PlanarGraph& g) {
  Cocycle c = Cocycle::zero(g);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty() || tok[0] == "v" || tok[0] == "h") continue;
    if ((tok[0] != "l" && tok[0] != "e") || tok.size() < 3 || tok.size() > 5) {
      throw InputError(InputErrorCode::syntax, "expected 'l <id1> <id2> rot=<p>/<den> q=<k>'", line_no);
    }
    int a = 0, b = 0;
    auto parse_int = [&](const std::string& s, auto& out) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError(InputErrorCode::syntax, "bad integer '" + s + "'", line_no);
      }
    };
    parse_int(tok[1], a);
    parse_int(tok[2], b);
    const auto u = g.index_of(a);
    const auto v = g.index_of(b);
    if (!u || !v) throw InputError(InputErrorCode::dangling_id, "unknown vertex id", line_no);
    const auto e = g.edge_between(*u, *v);
    if (!e) throw InputError(InputErrorCode::unknown_edge, "no such edge", line_no);
    Label label;
    for (std::size_t i = 3; i < tok.size(); ++i) {
      if (tok[i].rfind("rot=", 0) == 0) {
        try {
          label.rot = parse_angle(tok[i].substr(4));
        } catch (const std::invalid_argument&) {
          throw InputError(InputErrorCode::syntax, "bad rotation '" + tok[i] + "'", line_no);
        }
      } else if (tok[i].rfind("q=", 0) == 0) {
        parse_int(tok[i].substr(2), label.qexp);
      } else {
        throw InputError(InputErrorCode::syntax, "unknown label '" + tok[i] + "'", line_no);
      }
    }
    // Labels are given for traversal from the black endpoint to the white one.
    c[*e] = label;
  }
  return c;
}

}  // namespace kast
