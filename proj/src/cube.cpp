#include "latcube/cube.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latcube/errors.hpp"

namespace latcube {

namespace {

constexpr const char* kAxisNames[3] = {"i", "j", "k"};

// Cell coordinates of position t on the line (axis, a, b).
std::array<int, 3> line_cell(int axis, int a, int b, int t) {
  switch (axis) {
    case 0: return {t, a, b};
    case 1: return {a, t, b};
    default: return {a, b, t};
  }
}

}  // namespace

std::string LineViolation::to_string() const {
  std::ostringstream os;
  os << "line along " << kAxisNames[axis] << " with ";
  int f = 0;
  for (int ax = 0; ax < 3; ++ax) {
    if (ax == axis) continue;
    if (f) os << ", ";
    os << kAxisNames[ax] << '=' << fixed[f++] + 1;
  }
  os << " does not contain every symbol";
  return os.str();
}

std::optional<LineViolation> first_line_violation(
    int n, const std::vector<int>& entries) {
  std::vector<char> seen(n);
  for (int axis = 0; axis < 3; ++axis)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int t = 0; t < n; ++t) {
          auto [i, j, k] = line_cell(axis, a, b, t);
          int v = entries[(i * n + j) * n + k];
          if (seen[v]) return LineViolation{axis, {a, b}};
          seen[v] = 1;
        }
      }
  return std::nullopt;
}

LatinCube LatinCube::validate(int n, std::vector<int> entries) {
  if (n < 1) throw InvalidValue("cube order must be >= 1");
  if (entries.size() != static_cast<std::size_t>(n) * n * n)
    throw InvalidValue("cube of order " + std::to_string(n) + " needs " +
                       std::to_string(n * n * n) + " entries");
  for (int v : entries)
    if (v < 0 || v >= n)
      throw InvalidValue("cube symbol " + std::to_string(v + 1) +
                         " out of range");
  if (auto bad = first_line_violation(n, entries))
    throw InvalidValue("not a Latin cube: " + bad->to_string());
  return LatinCube(n, std::move(entries));
}

OrthogonalArray to_oa(const LatinCube& c) {
  const int n = c.order();
  OrthogonalArray a{n, {}};
  a.rows.reserve(c.cells().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a.rows.push_back({i, j, k, c.at(i, j, k)});
  return a;
}

LatinCube from_oa(const OrthogonalArray& a) {
  const int n = a.order;
  if (n < 1) throw InvalidValue("orthogonal array order must be >= 1");
  const std::size_t cells = static_cast<std::size_t>(n) * n * n;
  if (a.rows.size() != cells)
    throw InvalidValue("orthogonal array needs n^3 rows");
  std::vector<int> entries(cells, -1);
  for (const auto& q : a.rows) {
    for (int v : q)
      if (v < 0 || v >= n) throw InvalidValue("orthogonal array entry out of range");
    int& slot = entries[(q[0] * n + q[1]) * n + q[2]];
    if (slot != -1)
      throw InvalidValue("orthogonal array: first three coordinates repeat");
    slot = q[3];
  }
  // n^3 distinct cell triples cover every cell; the line condition gives the
  // remaining three "three determine the fourth" properties.
  return LatinCube::validate(n, std::move(entries));
}

LatinCube apply_isotopism(const LatinCube& c, const Paratopism& t) {
  if (!t.is_isotopism())
    throw InvalidValue("apply_isotopism: delta must be the identity");
  if (t.order() != c.order())
    throw MismatchError("apply_isotopism: order mismatch");
  const int n = c.order();
  std::array<Permutation, 3> inv{inverse(t.part(0)), inverse(t.part(1)),
                                 inverse(t.part(2))};
  std::vector<int> out(c.cells().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out[(i * n + j) * n + k] = t.part(3)(c.at(inv[0](i), inv[1](j), inv[2](k)));
  return LatinCube::validate(n, std::move(out));
}

LatinCube apply_paratopism(const LatinCube& c, const Paratopism& s) {
  if (s.order() != c.order())
    throw MismatchError("apply_paratopism: order mismatch");
  auto a = to_oa(c);
  for (auto& q : a.rows) q = act(s, q);
  std::sort(a.rows.begin(), a.rows.end());
  return from_oa(a);
}

int hamming(const LatinCube& c1, const LatinCube& c2) {
  if (c1.order() != c2.order()) throw MismatchError("hamming: order mismatch");
  int d = 0;
  for (std::size_t x = 0; x < c1.cells().size(); ++x)
    d += c1.cells()[x] != c2.cells()[x];
  return d;
}

LatinCube xor_cube() {
  std::vector<int> e(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) e[(i * 2 + j) * 2 + k] = (i + j + k) % 2;
  return LatinCube::validate(2, std::move(e));
}

LatinCube read_cube(std::istream& in) {
  long n = 0;
  if (!(in >> n) || n < 1 || n > 1024)
    throw ParseError("cube file must start with the order n >= 1");
  const std::size_t cells = static_cast<std::size_t>(n) * n * n;
  std::vector<int> entries;
  entries.reserve(cells);
  long v = 0;
  while (entries.size() < cells && in >> v) {
    if (v < 1 || v > n)
      throw ParseError("cube symbol " + std::to_string(v) + " out of range");
    entries.push_back(static_cast<int>(v - 1));
  }
  if (entries.size() != cells)
    throw ParseError("cube file has fewer than n^3 symbols");
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after n^3 symbols");
  try {
    return LatinCube::validate(static_cast<int>(n), std::move(entries));
  } catch (const InvalidValue& e) {
    throw ParseError(e.what());
  }
}

void write_cube(std::ostream& out, const LatinCube& c) {
  const int n = c.order();
  out << n << '\n';
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k) out << ' ';
        out << c.at(i, j, k) + 1;
      }
      out << '\n';
    }
}

LatinCube load_cube(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_cube(in);
}

void save_cube(const std::string& path, const LatinCube& c) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_cube(out, c);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace latcube
