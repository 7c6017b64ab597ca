#pragma once

// The 24-row reduction table: for each delta1 in S_4, the representative
// delta2 and the parts of a conjugate element expressed as products of the
// original parts a1..a4 (an empty product is the identity).

#include <array>
#include <vector>

#include "latcube/perm.hpp"
#include "latcube/wreath.hpp"

namespace latcube::table {

struct Row {
  const char* delta1;
  const char* delta2;
  std::array<std::vector<int>, 4> products;  // 1-based part indices
};

inline const std::vector<Row>& rows() {
  static const std::vector<Row> r = {
      {"()", "()", {{{1}, {2}, {3}, {4}}}},
      {"(1 2)", "(1 2)", {{{}, {1, 2}, {3}, {4}}}},
      {"(1 3)", "(1 2)", {{{}, {1, 3}, {2}, {4}}}},
      {"(1 4)", "(1 2)", {{{}, {1, 4}, {2}, {3}}}},
      {"(2 3)", "(1 2)", {{{}, {2, 3}, {1}, {4}}}},
      {"(2 4)", "(1 2)", {{{}, {2, 4}, {1}, {3}}}},
      {"(3 4)", "(1 2)", {{{}, {3, 4}, {1}, {2}}}},
      {"(1 2 3)", "(1 2 3)", {{{}, {}, {1, 2, 3}, {4}}}},
      {"(1 3 2)", "(1 2 3)", {{{}, {}, {1, 3, 2}, {4}}}},
      {"(1 2 4)", "(1 2 3)", {{{}, {}, {1, 2, 4}, {3}}}},
      {"(1 4 2)", "(1 2 3)", {{{}, {}, {1, 4, 2}, {3}}}},
      {"(1 3 4)", "(1 2 3)", {{{}, {}, {1, 3, 4}, {2}}}},
      {"(1 4 3)", "(1 2 3)", {{{}, {}, {1, 4, 3}, {2}}}},
      {"(2 3 4)", "(1 2 3)", {{{}, {}, {2, 3, 4}, {1}}}},
      {"(2 4 3)", "(1 2 3)", {{{}, {}, {2, 4, 3}, {1}}}},
      {"(1 2 3 4)", "(1 2 3 4)", {{{}, {}, {}, {1, 2, 3, 4}}}},
      {"(1 2 4 3)", "(1 2 3 4)", {{{}, {}, {}, {1, 2, 4, 3}}}},
      {"(1 3 2 4)", "(1 2 3 4)", {{{}, {}, {}, {1, 3, 2, 4}}}},
      {"(1 3 4 2)", "(1 2 3 4)", {{{}, {}, {}, {1, 3, 4, 2}}}},
      {"(1 4 3 2)", "(1 2 3 4)", {{{}, {}, {}, {1, 4, 3, 2}}}},
      {"(1 4 2 3)", "(1 2 3 4)", {{{}, {}, {}, {1, 4, 2, 3}}}},
      {"(1 3)(2 4)", "(1 3)(2 4)", {{{}, {}, {1, 3}, {2, 4}}}},
      {"(1 2)(3 4)", "(1 3)(2 4)", {{{}, {}, {1, 2}, {3, 4}}}},
      {"(1 4)(2 3)", "(1 3)(2 4)", {{{}, {}, {1, 4}, {2, 3}}}},
  };
  return r;
}

// The table's conjugate of s (whose delta is row.delta1).
inline Paratopism reduced(const Row& row, const Paratopism& s) {
  std::array<Permutation, 4> parts{
      Permutation::identity(s.order()), Permutation::identity(s.order()),
      Permutation::identity(s.order()), Permutation::identity(s.order())};
  for (int m = 0; m < 4; ++m)
    for (int idx : row.products[m]) parts[m] = parts[m] * s.part(idx - 1);
  return Paratopism(parts, parse_permutation(row.delta2, 4));
}

}  // namespace latcube::table
