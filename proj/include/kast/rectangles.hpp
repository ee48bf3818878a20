#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kast/poly.hpp"
#include "kast/verify.hpp"

namespace kast {

// 4 cos^2(k pi / (M+1)) + 4 cos^2(l pi / (N+1)); needs 1 <= k <= M, 1 <= l <= N.
double sigma_squared(int M, int N, int k, int l);

struct IndexSet {
  int M = 0;
  int N = 0;
  std::vector<std::pair<int, int>> indices;
};

// 1 <= k <= (M+1)/2 and 1 <= l <= N; when k = (M+1)/2 exactly, l <= (N+1)/2
// (plus) or l < (N+1)/2 (minus).
IndexSet x_plus(int M, int N);
IndexSet x_minus(int M, int N);

// prod over x_minus of (t - sigma^2), expanded in 50-digit floating point and
// rounded. Throws std::runtime_error if a coefficient is off an integer by
// more than 1e-6.
IntPoly closed_form_poly(int M, int N);

struct TableEntry {
  std::string key;  // "[m,n]" or "aztec-d"
  int rows = 0;     // rectangles
  int cols = 0;
  int order = 0;    // Aztec diamonds
  std::vector<Factor> factors;

  bool is_rectangle() const { return order == 0; }
};

// Parsed from the compiled-in reference data.
const std::vector<TableEntry>& reference_tables();
std::vector<TableEntry> parse_reference_tables(const std::string& json_text);

// Exact singular polynomial of the Kasteleyn class with zero roots removed.
IntPoly reduced_singular_polynomial(const PlanarGraph& g);

// Largest j with (t - r)^j dividing p; p must be non-zero.
unsigned root_multiplicity(const IntPoly& p, const Integer& r);

std::vector<VerificationReport> table_check();
VerificationReport table_check(const TableEntry& entry);

// Nonzero eigenvalues of K K* against the closed-form sigma^2 multiset.
VerificationReport spectrum_check(int M, int N, double tolerance = 1e-9);

// Singular vectors of the grid matrix with 1 on horizontal and i on
// vertical edges.
VerificationReport eigvec_check(int M, int N);

}  // namespace kast
