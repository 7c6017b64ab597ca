#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latcube/perm.hpp"

namespace latcube {

// A point of [n]^4; entries are 0-based.
using Quad = std::array<int, 4>;

// An element (a1, a2, a3, a4; delta) of S_n wr S_4. parts[m] permutes the
// values of coordinate m; delta (degree 4) then moves coordinate m to
// position m delta. delta = identity is an isotopism.
class Paratopism {
 public:
  Paratopism(std::array<Permutation, 4> parts, Permutation delta);

  static Paratopism identity(int n);
  // (e, e, e, e; delta).
  static Paratopism pure_delta(int n, const Permutation& delta);
  // (parts; e).
  static Paratopism isotopism(std::array<Permutation, 4> parts);

  int order() const { return parts_[0].degree(); }
  const std::array<Permutation, 4>& parts() const { return parts_; }
  const Permutation& part(int m) const { return parts_[m]; }
  const Permutation& delta() const { return delta_; }
  bool is_isotopism() const { return delta_.is_identity(); }

  friend bool operator==(const Paratopism&, const Paratopism&) = default;
  friend auto operator<=>(const Paratopism&, const Paratopism&) = default;

 private:
  std::array<Permutation, 4> parts_;
  Permutation delta_;
};

// (a_m b_{m delta_s} for each m; delta_s delta_t) for s = (a; delta_s),
// t = (b; delta_t). Acting by the result equals acting by s then t.
Paratopism compose(const Paratopism& s, const Paratopism& t);
inline Paratopism operator*(const Paratopism& s, const Paratopism& t) {
  return compose(s, t);
}
Paratopism inverse(const Paratopism& s);

// t^-1 s t.
Paratopism conjugate(const Paratopism& s, const Paratopism& t);

// result[m delta] = q[m] a_m.
Quad act(const Paratopism& s, const Quad& q);

// One entry per cycle of delta (1-cycles included): the cycle length and the
// cycle structure of the part product taken around the cycle from its
// smallest coordinate. Entries are kept sorted, so equality is multiset
// equality.
struct ClassSignature {
  struct Entry {
    int cycle_length;
    CycleStructure product_structure;
    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  CycleStructure delta_structure;

  std::string to_string() const;
  friend bool operator==(const ClassSignature&, const ClassSignature&) =
      default;
  friend auto operator<=>(const ClassSignature&, const ClassSignature&) =
      default;
};

// Product a_{c0} a_{c1} ... a_{ck-1} of the parts indexed by a delta cycle.
Permutation cycle_product(const Paratopism& s, const Cycle& delta_cycle);

ClassSignature class_signature(const Paratopism& s);

bool are_conjugate(const Paratopism& s1, const Paratopism& s2);

// tau with tau^-1 s1 tau = s2, or empty when the two are not conjugate.
// A coordinate relabelling (e, e, e, e; d3) first carries s1's delta onto
// s2's delta along a matching of cycles; a pure isotopism then solves each
// cycle with the part-walking formulas. The result is verified before it is
// returned.
std::optional<Paratopism> conjugator(const Paratopism& s1,
                                     const Paratopism& s2);

// Representative delta for each of the five cycle structures of S_4:
// e, (1 2), (1 2 3), (1 2 3 4), (1 3)(2 4).
Permutation representative_delta(const CycleStructure& delta_structure);

// The five representative deltas in census order.
std::vector<Permutation> representative_deltas();

struct CanonicalForm {
  Paratopism canonical;
  Paratopism witness;  // witness^-1 s witness = canonical
};

// Canonical element of the conjugacy class of s, fully determined by
// class_signature(s):
//   e:           (P1, P2, P3, P4; e)            P1 <= P2 <= P3 <= P4
//   (1 2):       (e, P, F1, F2; (1 2))          F1 <= F2
//   (1 2 3):     (e, e, P, F; (1 2 3))
//   (1 2 3 4):   (e, e, e, P; (1 2 3 4))
//   (1 3)(2 4):  (e, e, P1, P2; (1 3)(2 4))     P1 <= P2
// with every P, F a canonical-form permutation.
CanonicalForm canonicalize(const Paratopism& s);

// The canonical element for a signature (no witness).
Paratopism canonical_element(int n, const ClassSignature& sig);

// "n=3: ((1 2); (); (); (); (1 2))". Parts and delta use cycle or one-line
// notation; parts have degree n, delta degree 4. Without the "n=" prefix the
// order is default_order, or else the largest symbol among the parts.
Paratopism parse_paratopism(std::string_view text,
                            std::optional<int> default_order = std::nullopt);
std::string format_paratopism(const Paratopism& s);

// Every element of S_n wr S_4, (n!)^4 * 24 of them; intended for n <= 3.
std::vector<Paratopism> all_paratopisms(int n);

Paratopism random_paratopism(int n, std::mt19937_64& rng);

}  // namespace latcube
