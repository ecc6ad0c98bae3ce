// Timings for csanky / berkowitz / oracle and for the sequential vs
// balanced-tree Berkowitz product, with a bit-exactness cross-check
// between everything that ran on the same input.
#pragma once

#include "exalg/verify.hpp"

namespace exalg {

struct BenchOutput {
  std::string csv;  // algorithm,n,mode,wall_ms,scalar_muls,status
  bool all_equal;   // false when any two modes disagreed
};

BenchOutput run_bench(const RunConfig& cfg);

}  // namespace exalg
