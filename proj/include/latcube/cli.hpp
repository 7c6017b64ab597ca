#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcube::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kMismatch = 2,
  kNegative = 3,
  kBudget = 4,
  kIoError = 5,
};

// Entry point of the latcube tool; args excludes the program name.
//
//   act <cube-file> <paratopism>      apply a paratopism to a cube
//   distance <cube-file> <cube-file>  Hamming distance
//   conjugate <paratopism> <paratopism>
//   canonical <paratopism>
//   is-autopar <paratopism>
//   census <n>
//
// Global flags: --budget <nodes>, --out <path>, --quiet.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace latcube::cli
