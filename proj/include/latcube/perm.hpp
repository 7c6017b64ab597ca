#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latcube {

// Permutations of {0, ..., degree-1}. The C++ API is 0-based; every text
// format is 1-based.
//
// Permutations act from the right: compose(p, q) maps i to (i p) q, so
// applying p first and q second.
class Permutation {
 public:
  // Throws InvalidValue unless images is a bijection of {0..n-1}, n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  // Disjoint cycles over 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  std::span<const int> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Right-action product: i -> (i p) q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
Permutation inverse(const Permutation& p);

// q^-1 p q.
Permutation conjugate(const Permutation& p, const Permutation& q);

// A cycle maps points[j] to points[j+1], wrapping around.
struct Cycle {
  std::vector<int> points;

  int length() const { return static_cast<int>(points.size()); }
  int leading() const { return points.front(); }

  // Equal iff one is a rotation of the other.
  friend bool operator==(const Cycle& a, const Cycle& b);
};

// Disjoint cycles covering every point (1-cycles included). Each cycle starts
// at its smallest point; longest cycles come first, equal lengths ordered by
// ascending leading point.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

// c1^l1 . c2^l2 ... with c1 > c2 > ... >= 1.
class CycleStructure {
 public:
  struct Term {
    int length;
    int multiplicity;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CycleStructure() = default;
  // Any order, any repetition; zero or negative lengths are rejected.
  static CycleStructure from_lengths(std::vector<int> lengths);
  // Parses "3.1^2", "2^3", "4".
  static CycleStructure parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;
  // Expanded non-increasing list of cycle lengths (an integer partition).
  std::vector<int> lengths() const;
  std::string to_string() const;

  friend bool operator==(const CycleStructure&, const CycleStructure&) =
      default;
  // Lexicographic on lengths(); 1^n is the smallest structure of degree n.
  friend std::strong_ordering operator<=>(const CycleStructure& a,
                                          const CycleStructure& b);

 private:
  std::vector<Term> terms_;
};

CycleStructure cycle_structure(const Permutation& p);

// The permutation in canonical form with the given structure: cycles of
// consecutive points, longest first, e.g. 3.2.1 -> (1 2 3)(4 5)(6).
Permutation canonical_permutation(const CycleStructure& cs);

int orbit_length(const Permutation& p, int point);
std::vector<int> fixed_points(const Permutation& p);

bool are_conjugate(const Permutation& p, const Permutation& q);

// beta with beta^-1 p beta = q, pairing the i-th canonical cycle of p with the
// i-th canonical cycle of q of the same length. Empty if not conjugate.
std::optional<Permutation> conjugator(const Permutation& p,
                                      const Permutation& q);

// Cycle notation "(1 2 3)(4 5)" or one-line image notation "[2,3,1,5,4]".
// Without an explicit degree, the degree is the largest symbol mentioned.
Permutation parse_permutation(std::string_view text,
                              std::optional<int> degree = std::nullopt);

// Canonical cycle order. With include_fixed the 1-cycles are written too, so
// the degree is recoverable from the text; otherwise the identity is "()".
std::string format_permutation(const Permutation& p, bool include_fixed = true);

std::vector<Permutation> all_permutations(int degree);

Permutation random_permutation(int degree, std::mt19937_64& rng);

}  // namespace latcube
