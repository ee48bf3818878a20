#include <charconv>
#include <sstream>

#include "kast/errors.hpp"
#include "kast/graph.hpp"

namespace kast {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_id(std::string_view tok, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError(InputErrorCode::syntax, "bad vertex id '" + std::string(tok) + "'", line);
  }
  return value;
}

Rational parse_coord(std::string_view tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument&) {
    throw InputError(InputErrorCode::syntax, "bad coordinate '" + std::string(tok) + "'", line);
  }
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

PlanarGraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<HoleSpec> holes;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 5) throw InputError(InputErrorCode::syntax, "expected 'v <id> <x> <y> <w|b>'", line_no);
      Color color;
      if (tok[4] == "w") {
        color = Color::white;
      } else if (tok[4] == "b") {
        color = Color::black;
      } else {
        throw InputError(InputErrorCode::syntax, "vertex color must be 'w' or 'b'", line_no);
      }
      vertices.push_back({parse_id(tok[1], line_no),
                          Point{parse_coord(tok[2], line_no), parse_coord(tok[3], line_no)}, color});
    } else if (tok[0] == "e") {
      if (tok.size() < 3 || tok.size() > 5) {
        throw InputError(InputErrorCode::syntax, "expected 'e <id1> <id2> [rot=p/q] [q=k]'", line_no);
      }
      for (std::size_t i = 3; i < tok.size(); ++i) {
        try {
          if (starts_with(tok[i], "rot=")) {
            parse_angle(tok[i].substr(4));
          } else if (starts_with(tok[i], "q=")) {
            parse_rational(tok[i].substr(2)).convert_to<long long>();
            if (tok[i].find('/') != std::string_view::npos) throw std::invalid_argument("q");
          } else {
            throw std::invalid_argument("label");
          }
        } catch (const std::invalid_argument&) {
          throw InputError(InputErrorCode::syntax, "bad edge label '" + std::string(tok[i]) + "'", line_no);
        }
      }
      edges.emplace_back(parse_id(tok[1], line_no), parse_id(tok[2], line_no));
    } else if (tok[0] == "h") {
      HoleSpec spec;
      spec.walks.emplace_back();
      std::optional<Rational> wx, wy;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (starts_with(tok[i], "wx=")) {
          wx = parse_coord(tok[i].substr(3), line_no);
        } else if (starts_with(tok[i], "wy=")) {
          wy = parse_coord(tok[i].substr(3), line_no);
        } else if (tok[i] == "|") {
          spec.walks.emplace_back();
        } else {
          if (wx || wy) throw InputError(InputErrorCode::syntax, "witness must follow the boundary", line_no);
          spec.walks.back().push_back(parse_id(tok[i], line_no));
        }
      }
      if (wx.has_value() != wy.has_value()) {
        throw InputError(InputErrorCode::syntax, "witness needs both wx= and wy=", line_no);
      }
      if (wx) spec.witness = Point{*wx, *wy};
      for (const auto& walk : spec.walks) {
        if (walk.empty()) throw InputError(InputErrorCode::syntax, "empty hole boundary", line_no);
      }
      holes.push_back(std::move(spec));
    } else {
      throw InputError(InputErrorCode::syntax, "unknown directive '" + std::string(tok[0]) + "'", line_no);
    }
    if (end == text.size()) break;
  }
  return PlanarGraph(std::move(vertices), edges, holes);
}

std::string to_graph_text(const PlanarGraph& g) {
  std::ostringstream os;
  os << "# " << describe(g) << "\n";
  for (const Vertex& v : g.vertices()) {
    os << "v " << v.id << " " << to_string(v.pos.x) << " " << to_string(v.pos.y) << " "
       << (v.color == Color::white ? "w" : "b") << "\n";
  }
  for (const Edge& e : g.edges()) {
    const int a = g.vertices()[e.black].id;
    const int b = g.vertices()[e.white].id;
    os << "e " << std::min(a, b) << " " << std::max(a, b) << "\n";
  }
  for (const Hole& h : g.holes()) {
    os << "h";
    for (std::size_t w = 0; w < h.walks.size(); ++w) {
      if (w > 0) os << " |";
      for (std::size_t v : h.walks[w]) os << " " << g.vertices()[v].id;
    }
    if (h.witness) os << " wx=" << to_string(h.witness->x) << " wy=" << to_string(h.witness->y);
    os << "\n";
  }
  return os.str();
}

}  // namespace kast
