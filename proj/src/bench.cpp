#include "exalg/bench.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "exalg/stats.hpp"

namespace exalg {

namespace {

struct Timed {
  std::optional<Poly> result;
  double wall_ms = 0.0;
  std::uint64_t muls = 0;
  std::string status = "ok";
};

template <class F>
Timed timed_charpoly(F&& fn) {
  Timed t;
  stats::reset();
  auto start = std::chrono::steady_clock::now();
  try {
    t.result = fn();
  } catch (const Error& e) {
    t.status = std::string("skipped: ") + errc_name(e.code());
  }
  auto stop = std::chrono::steady_clock::now();
  t.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  t.muls = stats::scalar_muls.load(std::memory_order_relaxed);
  return t;
}

}  // namespace

BenchOutput run_bench(const RunConfig& cfg) {
  if (cfg.max_dim < 1) fail(Errc::BadIndex, "max-dim must be >= 1");
  std::vector<std::size_t> sizes;
  for (std::size_t n = 4; n <= cfg.max_dim; n *= 2) sizes.push_back(n);
  if (sizes.empty() || sizes.back() != cfg.max_dim) sizes.push_back(cfg.max_dim);

  std::ostringstream csv;
  csv << "algorithm,n,mode,wall_ms,scalar_muls,status\n";
  bool all_equal = true;
  SplitMix64 rng = stream_for(cfg.seed, "bench");

  for (std::size_t n : sizes) {
    Matrix a = random_matrix(rng, cfg.field, n, n);

    struct Row {
      const char* algorithm;
      const char* mode;
      Timed timed;
    };
    std::vector<Row> rows;
    rows.push_back({"berkowitz", "sequential",
                    timed_charpoly([&] { return berkowitz(a, ProductMode::sequential).poly; })});
    rows.push_back({"berkowitz", "tree",
                    timed_charpoly([&] { return berkowitz(a, ProductMode::tree, false).poly; })});
    if (cfg.parallel)
      rows.push_back({"berkowitz", "tree-parallel",
                      timed_charpoly([&] { return berkowitz(a, ProductMode::tree, true).poly; })});
    rows.push_back({"csanky", "-", timed_charpoly([&] { return csanky(a).poly; })});
    rows.push_back({"oracle", "-", timed_charpoly([&] { return charpoly_oracle(a).poly; })});

    const std::optional<Poly>& reference = rows.front().timed.result;
    for (auto& row : rows) {
      if (row.timed.result && reference && !(*row.timed.result == *reference)) {
        row.timed.status = "MISMATCH";
        all_equal = false;
      }
      csv << row.algorithm << "," << n << "," << row.mode << "," << row.timed.wall_ms << ","
          << row.timed.muls << "," << row.timed.status << "\n";
    }
  }
  return BenchOutput{csv.str(), all_equal};
}

}  // namespace exalg
