#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latcube/autopar.hpp"
#include "latcube/wreath.hpp"

namespace latcube {

// Cycle structures of degree n (integer partitions), ascending.
std::vector<CycleStructure> partitions(int n);

// One canonical representative per conjugacy class of S_n wr S_4, sorted by
// representative delta (e, (1 2), (1 2 3), (1 2 3 4), (1 3)(2 4)) and then by
// the cycle structures of the four parts.
std::vector<Paratopism> class_representatives(int n);

struct CensusRecord {
  ClassSignature signature;
  Paratopism representative;
  Verdict verdict;
  std::uint64_t nodes_used = 0;
  std::optional<LatinCube> witness;
  std::string witness_path;  // empty until written
};

// Runs exists_fixed_cube on every class representative. Rows are independent
// and evaluated on up to `threads` workers (0: hardware concurrency); the
// output order is the class_representatives order regardless.
std::vector<CensusRecord> run_census(int n, std::uint64_t budget,
                                     unsigned threads = 0);

// Writes each found witness as <dir>/witness_n{n}_{row}.cube, rows counted
// from 1, and records the path. Throws IoError.
void write_witnesses(std::vector<CensusRecord>& records,
                     const std::string& dir);

// Header: n,delta,part_structures,verdict,nodes_used,witness_path
void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records);

}  // namespace latcube
