#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcube/cube.hpp"
#include "latcube/wreath.hpp"

namespace latcube {

// C(i, j, k) a4 = C(i a1, j a2, k a3) at every cell. Requires delta = e.
bool is_autotopism(const Paratopism& t, const LatinCube& c);

// C^s = C.
bool is_autoparatopism_of(const Paratopism& s, const LatinCube& c);

// Orbits of [n]^4 under the cyclic group generated by s. Each orbit is sorted,
// so front() is its lexicographically smallest member, and the orbits are
// sorted by that representative.
struct OrbitPartition {
  int order = 0;
  std::vector<std::vector<Quad>> orbits;
  // orbit_of[((q0*n + q1)*n + q2)*n + q3] indexes into orbits.
  std::vector<int> orbit_of;

  int orbit_index(const Quad& q) const;
};

// The orbit of q in act order: q, q s, q s^2, ...
std::vector<Quad> orbit(const Paratopism& s, const Quad& q);

OrbitPartition orbit_partition(const Paratopism& s);

// True iff every orbit meeting the rows lies entirely inside them.
bool is_union_of_orbits(const OrbitPartition& p, const OrthogonalArray& a);

enum class Verdict { kFound, kAbsent, kBudgetExhausted };

const char* to_string(Verdict v);

struct SearchResult {
  Verdict verdict;
  std::optional<LatinCube> cube;  // set iff verdict == kFound
  std::uint64_t nodes = 0;        // orbit-addition attempts
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Largest order the fixed-cube search accepts.
inline constexpr int kMaxSearchOrder = 64;

// Backtracking search for a cube with C^s = C. O(C) is grown as a union of
// s-orbits: the lexicographically smallest empty cell is branched on in
// ascending symbol order, each choice adds the whole orbit of its row, and
// cells or line positions left with a single option are forced. Exceeding
// budget orbit additions yields kBudgetExhausted, never kAbsent.
SearchResult exists_fixed_cube(const Paratopism& s,
                               std::uint64_t budget = kDefaultBudget);

// Every Latin cube of order n in lexicographic order of cell vectors, by
// plain cell-by-cell backtracking. Orders above 3 throw InvalidValue unless
// allow_large is set (order 4 has 55296 cubes).
std::vector<LatinCube> enumerate_cubes(int n, bool allow_large = false);

}  // namespace latcube
