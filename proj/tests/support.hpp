#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "fleet.hpp"
#include "kast/graph.hpp"

namespace kast::testing {

inline std::string data_path(const std::string& name) { return std::string(KAST_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline PlanarGraph load(const std::string& name) { return parse_graph(read_data(name)); }

}  // namespace kast::testing
