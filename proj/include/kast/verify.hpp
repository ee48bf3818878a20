#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "kast/graph.hpp"
#include "kast/poly.hpp"
#include "kast/singular.hpp"

namespace kast {

using Json = nlohmann::ordered_json;

// Integers outside the int64 range are written as decimal strings.
Json to_json(const Integer& x);
Json to_json(const GaussLaurent& x);
Json to_json(const Complex& x);
// {"var":"t","coeffs":[c_n, ..., c_0]}
Json to_json(const IntPoly& p);
Json to_json(const Poly<GaussLaurent>& p);
Json to_json(const Poly<Complex>& p);

struct VerificationReport {
  std::string identity;
  std::string graph;
  Json lhs = Json::array();
  Json rhs = Json::array();
  bool pass = true;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  Json to_json() const;
};

struct Limits {
  std::size_t max_vertices = 12;
  std::size_t max_m = 6;
};

enum class Identity { det, coeffs, pipes, qpoly, gauge, parity };

Identity parse_identity(const std::string& name);
const char* to_string(Identity which);

// Attached to every report that touches the q-class.
extern const char* const q_convention_note;

// Named classes used by the sweeps: zero, kasteleyn, then `count` random
// classes with rotations in {0, 1/4, 1/2, 3/4} drawn from mt19937_64(seed).
struct NamedClass {
  std::string name;
  Cocycle cocycle;
};
std::vector<NamedClass> class_suite(const PlanarGraph& g, std::uint64_t seed, std::size_t random_count = 10);
Cocycle random_class(const PlanarGraph& g, std::mt19937_64& rng);
// Rotations in quarter turns, q exponents in {-1, 0, 1}.
VertexPotential random_potential(const PlanarGraph& g, std::mt19937_64& rng);

// Throws LimitError, with a budget estimate, when g exceeds the limits for
// the requested identity.
void check_limits(const PlanarGraph& g, Identity which, const Limits& limits);

VerificationReport verify_identity(const PlanarGraph& g, Identity which, const Limits& limits = {},
                                   std::uint64_t seed = 0);

}  // namespace kast
