#include "latcube/census.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <ostream>
#include <thread>

#include "latcube/cube.hpp"
#include "latcube/errors.hpp"

namespace latcube {

namespace {

void partitions_from(int remaining, int max_part, std::vector<int>& current,
                     std::vector<CycleStructure>& out) {
  if (remaining == 0) {
    out.push_back(CycleStructure::from_lengths(current));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_from(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Cartesian power of `items`, `arity` factors.
template <typename F>
void for_each_tuple(const std::vector<CycleStructure>& items, int arity, F&& f) {
  std::vector<std::size_t> idx(arity, 0);
  std::vector<CycleStructure> tuple(arity);
  while (true) {
    for (int a = 0; a < arity; ++a) tuple[a] = items[idx[a]];
    f(tuple);
    int a = arity - 1;
    while (a >= 0 && ++idx[a] == items.size()) idx[a--] = 0;
    if (a < 0) return;
  }
}

}  // namespace

std::vector<CycleStructure> partitions(int n) {
  if (n < 1) throw InvalidValue("partitions: n must be >= 1");
  std::vector<CycleStructure> out;
  std::vector<int> current;
  partitions_from(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Paratopism> class_representatives(int n) {
  const auto parts = partitions(n);
  const auto deltas = representative_deltas();
  const auto e = Permutation::identity(n);
  auto canon = [](const CycleStructure& cs) { return canonical_permutation(cs); };

  // Free slots per form; the other leading parts are the identity.
  struct Form {
    int free;
    std::array<Permutation, 4> (*fill)(const std::vector<Permutation>&,
                                      const Permutation&);
  };
  const Form forms[5] = {
      {4, [](const std::vector<Permutation>& f, const Permutation&) {
         return std::array{f[0], f[1], f[2], f[3]};
       }},
      {3, [](const std::vector<Permutation>& f, const Permutation& id) {
         return std::array{id, f[0], f[1], f[2]};
       }},
      {2, [](const std::vector<Permutation>& f, const Permutation& id) {
         return std::array{id, id, f[0], f[1]};
       }},
      {1, [](const std::vector<Permutation>& f, const Permutation& id) {
         return std::array{id, id, id, f[0]};
       }},
      {2, [](const std::vector<Permutation>& f, const Permutation& id) {
         return std::array{id, id, f[0], f[1]};
       }},
  };

  std::vector<Paratopism> reps;
  for (int d = 0; d < 5; ++d) {
    std::map<ClassSignature, Paratopism> seen;
    for_each_tuple(parts, forms[d].free, [&](const std::vector<CycleStructure>& t) {
      std::vector<Permutation> free;
      for (const auto& cs : t) free.push_back(canon(cs));
      Paratopism s(forms[d].fill(free, e), deltas[d]);
      auto sig = class_signature(s);
      if (!seen.contains(sig)) seen.emplace(sig, canonical_element(n, sig));
    });
    std::vector<Paratopism> block;
    for (auto& [sig, rep] : seen) block.push_back(rep);
    std::sort(block.begin(), block.end(), [](const Paratopism& a, const Paratopism& b) {
      std::array<CycleStructure, 4> sa, sb;
      for (int m = 0; m < 4; ++m) {
        sa[m] = cycle_structure(a.part(m));
        sb[m] = cycle_structure(b.part(m));
      }
      return sa < sb;
    });
    reps.insert(reps.end(), block.begin(), block.end());
  }
  return reps;
}

std::vector<CensusRecord> run_census(int n, std::uint64_t budget,
                                     unsigned threads) {
  const auto reps = class_representatives(n);
  std::vector<std::optional<CensusRecord>> slots(reps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < reps.size();) {
      auto result = exists_fixed_cube(reps[i], budget);
      slots[i] = CensusRecord{class_signature(reps[i]), reps[i], result.verdict,
                              result.nodes, std::move(result.cube), {}};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, reps.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<CensusRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void write_witnesses(std::vector<CensusRecord>& records, const std::string& dir) {
  namespace fs = std::filesystem;
  for (std::size_t row = 0; row < records.size(); ++row) {
    auto& r = records[row];
    if (!r.witness) continue;
    auto name = "witness_n" + std::to_string(r.representative.order()) + "_" +
                std::to_string(row + 1) + ".cube";
    auto path = dir.empty() ? fs::path(name) : fs::path(dir) / name;
    save_cube(path.string(), *r.witness);
    r.witness_path = path.string();
  }
}

void write_census_csv(std::ostream& out,
                      const std::vector<CensusRecord>& records) {
  out << "n,delta,part_structures,verdict,nodes_used,witness_path\n";
  for (const auto& r : records) {
    const auto& s = r.representative;
    out << s.order() << ',' << format_permutation(s.delta(), false) << ',';
    for (int m = 0; m < 4; ++m) {
      if (m) out << ';';
      out << cycle_structure(s.part(m)).to_string();
    }
    out << ',' << to_string(r.verdict) << ',' << r.nodes_used << ','
        << r.witness_path << '\n';
  }
}

}  // namespace latcube
