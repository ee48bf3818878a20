#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kast/graph.hpp"

namespace kast::testing {

// Induced subregion of the 4x4 grid: each cell kept with probability 1/2 by
// a small LCG, retried until 2..12 cells survive.
inline PlanarGraph random_subregion(unsigned seed) {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL ^ seed;
  for (;;) {
    std::string text;
    int cells = 0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        const bool keep = (s >> 33) & 1;
        text += keep ? '#' : '.';
        cells += keep;
      }
      text += '\n';
    }
    if (cells >= 2 && cells <= 12) return from_ascii(text);
  }
}

struct FleetGraph {
  std::string name;
  PlanarGraph graph;
};

// Every rectangle with mn <= 12, the order-1 Aztec diamond, the 8-cycle ring
// and five random subregions of the 4x4 grid.
inline std::vector<FleetGraph> fleet() {
  std::vector<FleetGraph> out;
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; m * n <= 12; ++n) {
      out.push_back({"grid " + std::to_string(m) + "x" + std::to_string(n), rectangle_grid(m, n)});
    }
  }
  out.push_back({"aztec 1", aztec_diamond(1)});
  out.push_back({"ring", from_ascii("###\n#.#\n###\n")});
  for (unsigned s = 0; s < 5; ++s) out.push_back({"subregion " + std::to_string(s), random_subregion(s)});
  return out;
}

}  // namespace kast::testing
