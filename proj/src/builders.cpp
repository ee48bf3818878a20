#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "kast/errors.hpp"
#include "kast/graph.hpp"

namespace kast {

namespace {

using LatticePoint = std::pair<int, int>;

// Cells of a quadriculated region on the integer lattice, each carrying a
// vertex id. Drawing position is lattice + offset in both coordinates.
struct Lattice {
  std::map<LatticePoint, int> ids;
  Rational offset = 0;

  bool has(int x, int y) const { return ids.count({x, y}) != 0; }
  int id(int x, int y) const { return ids.at({x, y}); }
};

// Hierholzer decomposition of a balanced directed chain into closed walks.
std::vector<std::vector<int>> closed_walks(std::multimap<int, int> out_edges) {
  std::vector<std::vector<int>> walks;
  while (!out_edges.empty()) {
    const int start = out_edges.begin()->first;
    std::vector<int> stack{start};
    std::vector<int> circuit;
    while (!stack.empty()) {
      const int v = stack.back();
      auto it = out_edges.find(v);
      if (it == out_edges.end()) {
        circuit.push_back(v);
        stack.pop_back();
      } else {
        stack.push_back(it->second);
        out_edges.erase(it);
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuit.pop_back();  // first vertex repeated at the end
    walks.push_back(std::move(circuit));
  }
  return walks;
}

// Bounded complement components of the lattice adjacency graph, found by
// flooding unit plaquettes from outside the bounding box. A plaquette side is
// a wall exactly when both its corners are cells (the induced edge).
std::vector<HoleSpec> lattice_holes(const Lattice& lat) {
  if (lat.ids.empty()) return {};
  int min_x = lat.ids.begin()->first.first, max_x = min_x;
  int min_y = lat.ids.begin()->first.second, max_y = min_y;
  for (const auto& [p, id] : lat.ids) {
    min_x = std::min(min_x, p.first);
    max_x = std::max(max_x, p.first);
    min_y = std::min(min_y, p.second);
    max_y = std::max(max_y, p.second);
  }
  // Plaquette (i, j) is the unit square with lower-left corner (i, j).
  const int lo_i = min_x - 1, hi_i = max_x, lo_j = min_y - 1, hi_j = max_y;
  const int width = hi_i - lo_i + 1;
  const int height = hi_j - lo_j + 1;
  auto index = [&](int i, int j) { return static_cast<std::size_t>((j - lo_j) * width + (i - lo_i)); };
  std::vector<int> label(static_cast<std::size_t>(width * height), -1);

  auto wall = [&](int x0, int y0, int x1, int y1) { return lat.has(x0, y0) && lat.has(x1, y1); };
  auto flood = [&](int i0, int j0, int tag, std::vector<LatticePoint>* members) {
    std::deque<LatticePoint> queue{{i0, j0}};
    label[index(i0, j0)] = tag;
    while (!queue.empty()) {
      const auto [i, j] = queue.front();
      queue.pop_front();
      if (members) members->push_back({i, j});
      const struct {
        int di, dj, x0, y0, x1, y1;
      } moves[] = {
          {1, 0, i + 1, j, i + 1, j + 1},
          {-1, 0, i, j, i, j + 1},
          {0, 1, i, j + 1, i + 1, j + 1},
          {0, -1, i, j, i + 1, j},
      };
      for (const auto& mv : moves) {
        const int ni = i + mv.di, nj = j + mv.dj;
        if (ni < lo_i || ni > hi_i || nj < lo_j || nj > hi_j) continue;
        if (label[index(ni, nj)] != -1 || wall(mv.x0, mv.y0, mv.x1, mv.y1)) continue;
        label[index(ni, nj)] = tag;
        queue.push_back({ni, nj});
      }
    }
  };

  for (int j = lo_j; j <= hi_j; ++j) {
    for (int i = lo_i; i <= hi_i; ++i) {
      const bool border = i == lo_i || i == hi_i || j == lo_j || j == hi_j;
      if (border && label[index(i, j)] == -1) flood(i, j, 0, nullptr);
    }
  }

  std::vector<HoleSpec> holes;
  int tag = 1;
  for (int j = lo_j; j <= hi_j; ++j) {
    for (int i = lo_i; i <= hi_i; ++i) {
      if (label[index(i, j)] != -1) continue;
      std::vector<LatticePoint> members;
      flood(i, j, tag++, &members);
      // Sum of counterclockwise plaquette boundaries; interior sides cancel.
      std::map<std::pair<LatticePoint, LatticePoint>, int> chain;
      for (const auto& [pi, pj] : members) {
        const LatticePoint c[4] = {{pi, pj}, {pi + 1, pj}, {pi + 1, pj + 1}, {pi, pj + 1}};
        for (int k = 0; k < 4; ++k) {
          const LatticePoint& a = c[k];
          const LatticePoint& b = c[(k + 1) % 4];
          auto rev = chain.find({b, a});
          if (rev != chain.end()) {
            chain.erase(rev);
          } else {
            chain[{a, b}] += 1;
          }
        }
      }
      std::multimap<int, int> out_edges;
      for (const auto& [seg, mult] : chain) {
        out_edges.emplace(lat.id(seg.first.first, seg.first.second),
                          lat.id(seg.second.first, seg.second.second));
      }
      HoleSpec spec;
      spec.walks = closed_walks(std::move(out_edges));
      spec.witness = Point{Rational(i) + lat.offset + Rational(1, 2),
                           Rational(j) + lat.offset + Rational(1, 2)};
      holes.push_back(std::move(spec));
    }
  }
  return holes;
}

// Vertices colored white when `white(x, y)` holds, edges between unit
// neighbours, holes from the plaquette flood.
PlanarGraph lattice_graph(const Lattice& lat, const std::function<bool(int, int)>& white) {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [p, id] : lat.ids) {
    const auto [x, y] = p;
    vertices.push_back({id, Point{Rational(x) + lat.offset, Rational(y) + lat.offset},
                        white(x, y) ? Color::white : Color::black});
    if (lat.has(x + 1, y)) edges.emplace_back(id, lat.id(x + 1, y));
    if (lat.has(x, y + 1)) edges.emplace_back(id, lat.id(x, y + 1));
  }
  return PlanarGraph::trusted(std::move(vertices), edges, lattice_holes(lat));
}

bool even(int v) { return v % 2 == 0; }

}  // namespace

PlanarGraph rectangle_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("rectangle dimensions must be positive");
  Lattice lat;
  for (int l = 1; l <= cols; ++l) {
    for (int k = 1; k <= rows; ++k) lat.ids[{k, l}] = (l - 1) * rows + k;
  }
  return lattice_graph(lat, [](int x, int y) { return even(x + y); });
}

PlanarGraph aztec_diamond(int order) {
  if (order < 1) throw std::invalid_argument("Aztec diamond order must be positive");
  // Cell centers (a + 1/2, b + 1/2) with |a + 1/2| + |b + 1/2| <= order,
  // i.e. |2a + 1| + |2b + 1| <= 2 * order. Ids in reading order.
  Lattice lat;
  lat.offset = Rational(1, 2);
  int next_id = 1;
  for (int b = order - 1; b >= -order; --b) {
    for (int a = -order; a <= order - 1; ++a) {
      if (std::abs(2 * a + 1) + std::abs(2 * b + 1) <= 2 * order) lat.ids[{a, b}] = next_id++;
    }
  }
  return lattice_graph(lat, [](int a, int b) { return even(a + b); });
}

PlanarGraph from_ascii(std::string_view region) {
  Lattice lat;
  int row = 0, col = 0, next_id = 1;
  for (char ch : region) {
    switch (ch) {
      case '\n':
        ++row;
        col = 0;
        continue;
      case '\r':
        continue;
      case '#':
        lat.ids[{col, -row}] = next_id++;
        break;
      case '.':
        break;
      default:
        throw InputError(InputErrorCode::bad_character,
                         std::string("unexpected character '") + ch + "' in region", row + 1);
    }
    ++col;
  }
  if (lat.ids.empty()) throw InputError(InputErrorCode::empty_region, "region has no '#' cells");
  // (row + column) parity; rows run downwards, so y = -row.
  return lattice_graph(lat, [](int x, int y) { return even(x - y); });
}

}  // namespace kast
