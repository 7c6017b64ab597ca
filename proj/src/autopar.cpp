#include "latcube/autopar.hpp"

#include <algorithm>
#include <bit>

#include "latcube/errors.hpp"

namespace latcube {

bool is_autotopism(const Paratopism& t, const LatinCube& c) {
  if (!t.is_isotopism())
    throw InvalidValue("is_autotopism: delta must be the identity");
  if (t.order() != c.order())
    throw MismatchError("is_autotopism: order mismatch");
  const int n = c.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t.part(3)(c.at(i, j, k)) !=
            c.at(t.part(0)(i), t.part(1)(j), t.part(2)(k)))
          return false;
  return true;
}

bool is_autoparatopism_of(const Paratopism& s, const LatinCube& c) {
  return hamming(c, apply_paratopism(c, s)) == 0;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kFound: return "autoparatopism";
    case Verdict::kAbsent: return "not-autoparatopism";
    case Verdict::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

int encode(const Quad& q, int n) {
  return ((q[0] * n + q[1]) * n + q[2]) * n + q[3];
}

}  // namespace

int OrbitPartition::orbit_index(const Quad& q) const {
  return orbit_of[encode(q, order)];
}

std::vector<Quad> orbit(const Paratopism& s, const Quad& q) {
  std::vector<Quad> out{q};
  for (Quad x = act(s, q); x != q; x = act(s, x)) out.push_back(x);
  return out;
}

OrbitPartition orbit_partition(const Paratopism& s) {
  const int n = s.order();
  OrbitPartition p;
  p.order = n;
  const int total = n * n * n * n;
  p.orbit_of.assign(total, -1);
  // Visiting quadruples in lexicographic order makes each orbit's first-seen
  // member its smallest, and orbits come out sorted by representative.
  for (int code = 0; code < total; ++code) {
    if (p.orbit_of[code] != -1) continue;
    Quad q{code / (n * n * n), code / (n * n) % n, code / n % n, code % n};
    auto members = orbit(s, q);
    std::sort(members.begin(), members.end());
    const int id = static_cast<int>(p.orbits.size());
    for (const auto& m : members) p.orbit_of[encode(m, n)] = id;
    p.orbits.push_back(std::move(members));
  }
  return p;
}

bool is_union_of_orbits(const OrbitPartition& p, const OrthogonalArray& a) {
  const int n = p.order;
  std::vector<char> present(p.orbit_of.size(), 0);
  for (const auto& q : a.rows) present[encode(q, n)] = 1;
  for (const auto& q : a.rows)
    for (const auto& m : p.orbits[p.orbit_index(q)])
      if (!present[encode(m, n)]) return false;
  return true;
}

namespace {

// Partial cube with per-line symbol masks and an undo trail.
class FixedCubeSearch {
 public:
  FixedCubeSearch(const Paratopism& s, std::uint64_t budget)
      : s_(s),
        n_(s.order()),
        budget_(budget),
        full_(n_ == 64 ? ~0ULL : (1ULL << n_) - 1),
        cells_(static_cast<std::size_t>(n_) * n_ * n_, -1),
        line_mask_{std::vector<std::uint64_t>(n_ * n_, 0),
                   std::vector<std::uint64_t>(n_ * n_, 0),
                   std::vector<std::uint64_t>(n_ * n_, 0)} {}

  SearchResult run() {
    bool found = search();
    SearchResult r{Verdict::kAbsent, std::nullopt, nodes_};
    if (found) {
      r.verdict = Verdict::kFound;
      r.cube = LatinCube::validate(n_, cells_);
    } else if (aborted_) {
      r.verdict = Verdict::kBudgetExhausted;
    }
    return r;
  }

 private:
  int index(int i, int j, int k) const { return (i * n_ + j) * n_ + k; }

  // Symbols still allowed at an empty cell by its three lines.
  std::uint64_t domain(int i, int j, int k) const {
    return full_ & ~(line_mask_[0][j * n_ + k] | line_mask_[1][i * n_ + k] |
                     line_mask_[2][i * n_ + j]);
  }

  bool place(const Quad& q) {
    const int x = index(q[0], q[1], q[2]);
    if (cells_[x] == q[3]) return true;
    if (cells_[x] != -1) return false;
    const std::uint64_t bit = 1ULL << q[3];
    if (!(domain(q[0], q[1], q[2]) & bit)) return false;
    cells_[x] = q[3];
    line_mask_[0][q[1] * n_ + q[2]] |= bit;
    line_mask_[1][q[0] * n_ + q[2]] |= bit;
    line_mask_[2][q[0] * n_ + q[1]] |= bit;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      const int k = x % n_, j = x / n_ % n_, i = x / (n_ * n_);
      const std::uint64_t bit = 1ULL << cells_[x];
      line_mask_[0][j * n_ + k] &= ~bit;
      line_mask_[1][i * n_ + k] &= ~bit;
      line_mask_[2][i * n_ + j] &= ~bit;
      cells_[x] = -1;
    }
  }

  // Adds the whole orbit of q or nothing.
  bool add_orbit(const Quad& q) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const std::size_t mark = trail_.size();
    Quad x = q;
    do {
      if (!place(x)) {
        undo(mark);
        return false;
      }
      x = act(s_, x);
    } while (x != q);
    return true;
  }

  // Naked and hidden singles to a fixpoint. On failure the caller unwinds.
  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          for (int k = 0; k < n_; ++k) {
            if (cells_[index(i, j, k)] != -1) continue;
            const std::uint64_t dom = domain(i, j, k);
            if (dom == 0) return false;
            if (std::has_single_bit(dom)) {
              if (!add_orbit({i, j, k, std::countr_zero(dom)})) return false;
              changed = true;
            }
          }
      for (int axis = 0; axis < 3; ++axis)
        for (int a = 0; a < n_; ++a)
          for (int b = 0; b < n_; ++b) {
            std::uint64_t missing = full_ & ~line_mask_[axis][a * n_ + b];
            while (missing) {
              const int sym = std::countr_zero(missing);
              missing &= missing - 1;
              // An earlier forced orbit in this pass may already have put
              // sym on this line.
              if (line_mask_[axis][a * n_ + b] >> sym & 1) continue;
              int count = 0;
              Quad where{};
              for (int t = 0; t < n_ && count < 2; ++t) {
                Quad c = axis == 0 ? Quad{t, a, b, sym}
                         : axis == 1 ? Quad{a, t, b, sym}
                                     : Quad{a, b, t, sym};
                if (cells_[index(c[0], c[1], c[2])] == -1 &&
                    (domain(c[0], c[1], c[2]) >> sym & 1)) {
                  ++count;
                  where = c;
                }
              }
              if (count == 0) return false;
              if (count == 1) {
                if (!add_orbit(where)) return false;
                changed = true;
              }
            }
          }
    }
    return true;
  }

  bool search() {
    if (!propagate()) return false;
    auto it = std::find(cells_.begin(), cells_.end(), -1);
    if (it == cells_.end()) return true;
    const int x = static_cast<int>(it - cells_.begin());
    const int k = x % n_, j = x / n_ % n_, i = x / (n_ * n_);
    for (std::uint64_t dom = domain(i, j, k); dom; dom &= dom - 1) {
      const std::size_t mark = trail_.size();
      if (add_orbit({i, j, k, std::countr_zero(dom)}) && search()) return true;
      undo(mark);
      if (aborted_) return false;
    }
    return false;
  }

  const Paratopism& s_;
  const int n_;
  const std::uint64_t budget_;
  const std::uint64_t full_;
  std::vector<int> cells_;
  std::vector<std::uint64_t> line_mask_[3];
  std::vector<int> trail_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult exists_fixed_cube(const Paratopism& s, std::uint64_t budget) {
  if (s.order() > kMaxSearchOrder)
    throw InvalidValue("exists_fixed_cube: order above " +
                       std::to_string(kMaxSearchOrder));
  auto result = FixedCubeSearch(s, budget).run();
  if (result.cube && !is_autoparatopism_of(s, *result.cube))
    throw std::logic_error("exists_fixed_cube: witness is not fixed");
  return result;
}

namespace {

void enumerate_from(int x, int n, std::vector<int>& cells,
                    std::vector<std::vector<char>>& used,
                    std::vector<LatinCube>& out) {
  if (x == static_cast<int>(cells.size())) {
    out.push_back(LatinCube::validate(n, cells));
    return;
  }
  const int k = x % n, j = x / n % n, i = x / (n * n);
  for (int v = 0; v < n; ++v) {
    char& a = used[0][(j * n + k) * n + v];
    char& b = used[1][(i * n + k) * n + v];
    char& c = used[2][(i * n + j) * n + v];
    if (a || b || c) continue;
    a = b = c = 1;
    cells[x] = v;
    enumerate_from(x + 1, n, cells, used, out);
    a = b = c = 0;
  }
}

}  // namespace

std::vector<LatinCube> enumerate_cubes(int n, bool allow_large) {
  if (n < 1) throw InvalidValue("enumerate_cubes: order must be >= 1");
  if (n > 3 && !allow_large)
    throw InvalidValue("enumerate_cubes: order above 3 needs allow_large");
  std::vector<int> cells(static_cast<std::size_t>(n) * n * n, -1);
  std::vector<std::vector<char>> used(
      3, std::vector<char>(static_cast<std::size_t>(n) * n * n, 0));
  std::vector<LatinCube> out;
  enumerate_from(0, n, cells, used, out);
  return out;
}

}  // namespace latcube
