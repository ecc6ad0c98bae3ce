// Randomized cross-verification corpus: algorithm agreement against the
// cofactor oracle, Cayley-Hamilton, similarity invariance, block
// factorization, Krylov divisibility, determinant multiplicativity and
// the companion-series identity. Reports are pure functions of the
// configuration, hence byte-identical across runs.
#pragma once

#include <functional>
#include <optional>
#include <span>

#include "exalg/principles.hpp"
#include "exalg/rng.hpp"

namespace exalg {

enum class AlgSel { csanky, berkowitz, oracle, all };

struct RunConfig {
  Field field = Field::rationals();
  AlgSel alg = AlgSel::all;
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t max_dim = 5;
  bool parallel = false;
};

// Random entries: integers in [-5, 5] over Q, uniform residues over GF(p).
Matrix random_matrix(SplitMix64& rng, const Field& F, std::size_t m, std::size_t n);
Poly random_monic(SplitMix64& rng, const Field& F, std::size_t degree);
// Product of random elementary row operations; always invertible.
Matrix random_invertible(SplitMix64& rng, const Field& F, std::size_t n);

struct PropertyResult {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status;
  std::string detail;  // case count, skip reason, or counterexample dump
};

struct Property {
  std::string name;
  // Pass/Skip detail or Fail with a serialized counterexample.
  std::function<PropertyResult(const RunConfig&)> run;
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  bool all_ok;
  std::string text;  // the full printable report
};

std::vector<Property> standard_properties();
VerifyReport run_properties(std::span<const Property> props, const RunConfig& cfg);
VerifyReport run_verify(const RunConfig& cfg);

}  // namespace exalg
