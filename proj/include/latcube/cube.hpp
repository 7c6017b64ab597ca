#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latcube/wreath.hpp"

namespace latcube {

// The set {(i, j, k, C(i, j, k))}; rows are kept sorted. Any three
// coordinates of a row determine the fourth.
struct OrthogonalArray {
  int order = 0;
  std::vector<Quad> rows;

  friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) =
      default;
};

// A line fixes two of the three cell coordinates; axis names the free one.
struct LineViolation {
  int axis;        // 0, 1 or 2
  int fixed[2];    // the two fixed coordinates in axis order, 0-based
  std::string to_string() const;
};

// An order-n cube whose every line holds each symbol exactly once. Cells and
// symbols are 0-based in the API.
class LatinCube {
 public:
  // entries[(i*n + j)*n + k] = C(i, j, k). Throws InvalidValue naming the
  // first violated line.
  static LatinCube validate(int order, std::vector<int> entries);

  int order() const { return n_; }
  int at(int i, int j, int k) const { return cells_[(i * n_ + j) * n_ + k]; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const LatinCube&, const LatinCube&) = default;
  friend auto operator<=>(const LatinCube&, const LatinCube&) = default;

 private:
  LatinCube(int order, std::vector<int> cells)
      : n_(order), cells_(std::move(cells)) {}

  int n_;
  std::vector<int> cells_;
};

// First line that misses a symbol, scanning axis 0, 1, 2 and fixed
// coordinates lexicographically. Entries must already be in range.
std::optional<LineViolation> first_line_violation(int order,
                                                  const std::vector<int>& entries);

OrthogonalArray to_oa(const LatinCube& c);
// Throws InvalidValue unless the rows form the orthogonal array of a Latin
// cube.
LatinCube from_oa(const OrthogonalArray& a);

// C'(i, j, k) = C(i a1^-1, j a2^-1, k a3^-1) a4. Requires delta = e.
LatinCube apply_isotopism(const LatinCube& c, const Paratopism& t);

// The cube whose orthogonal array is {act(s, q) : q in O(C)}.
LatinCube apply_paratopism(const LatinCube& c, const Paratopism& s);

// Number of rows of O(c1) missing from O(c2); the number of differing cells.
int hamming(const LatinCube& c1, const LatinCube& c2);

// C(i, j, k) = 1 + ((i + j + k) mod 2) in 1-based terms.
LatinCube xor_cube();

// Text format: first line n, then n^2 lines of n symbols (1-based). Cell
// (i, j, k) is on line (i-1)n + j, column k.
LatinCube read_cube(std::istream& in);
void write_cube(std::ostream& out, const LatinCube& c);
LatinCube load_cube(const std::string& path);
void save_cube(const std::string& path, const LatinCube& c);

}  // namespace latcube
