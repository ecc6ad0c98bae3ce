#include <doctest.h>

#include <sstream>

#include "exalg/bench.hpp"
#include "exalg/io.hpp"
#include "exalg/verify.hpp"

using namespace exalg;

TEST_SUITE("verify") {
  TEST_CASE("standard corpus passes over Q") {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.count = 15;
    cfg.max_dim = 4;
    VerifyReport r = run_verify(cfg);
    CHECK(r.all_ok);
    for (const auto& res : r.results) CHECK(res.status != PropertyResult::Status::Fail);
  }

  TEST_CASE("report bytes are deterministic for a fixed seed") {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.count = 10;
    cfg.max_dim = 4;
    VerifyReport a = run_verify(cfg);
    VerifyReport b = run_verify(cfg);
    CHECK(a.text == b.text);
  }

  TEST_CASE("csanky checks are skipped over GF(2)") {
    RunConfig cfg;
    cfg.field = Field::gf(2);
    cfg.count = 10;
    cfg.max_dim = 4;
    VerifyReport r = run_verify(cfg);
    CHECK(r.all_ok);
    bool saw_csanky_skip = false, saw_berkowitz_pass = false;
    for (const auto& res : r.results) {
      if (res.name.find("csanky") != std::string::npos) {
        CHECK(res.status == PropertyResult::Status::Skip);
        saw_csanky_skip = true;
      }
      if (res.name == "cayley-hamilton[berkowitz]") {
        CHECK(res.status == PropertyResult::Status::Pass);
        saw_berkowitz_pass = true;
      }
    }
    CHECK(saw_csanky_skip);
    CHECK(saw_berkowitz_pass);
  }

  TEST_CASE("algorithm selection filters the report") {
    RunConfig cfg;
    cfg.alg = AlgSel::berkowitz;
    cfg.count = 5;
    cfg.max_dim = 3;
    VerifyReport r = run_verify(cfg);
    for (const auto& res : r.results)
      CHECK(res.name.find("csanky") == std::string::npos);
  }

  TEST_CASE("a failing property reports a counterexample and flips the exit") {
    std::vector<Property> props;
    props.push_back(Property{
        "always-fails", [](const RunConfig& cfg) {
          Matrix a = Matrix::identity(cfg.field, 2);
          return PropertyResult{"always-fails", PropertyResult::Status::Fail,
                                "case 0; offending matrix:\n" + serialize(a, Format::plain)};
        }});
    RunConfig cfg;
    VerifyReport r = run_properties(props, cfg);
    CHECK(!r.all_ok);
    CHECK(r.text.find("FAIL always-fails") != std::string::npos);
    CHECK(r.text.find("2 2") != std::string::npos);  // the dump is replayable
  }

  TEST_CASE("gf(5) corpus passes with csanky limited by the characteristic") {
    RunConfig cfg;
    cfg.field = Field::gf(5);
    cfg.count = 10;
    cfg.max_dim = 6;
    VerifyReport r = run_verify(cfg);
    CHECK(r.all_ok);
    for (const auto& res : r.results)
      if (res.name.find("csanky") != std::string::npos)
        CHECK(res.status == PropertyResult::Status::Pass);  // dims capped at 4 internally
  }

  TEST_CASE("bench emits CSV, cross-checks modes, and guards the oracle") {
    RunConfig cfg;
    cfg.seed = 3;
    cfg.max_dim = 16;
    cfg.parallel = true;
    BenchOutput out = run_bench(cfg);
    CHECK(out.all_equal);
    CHECK(out.csv.rfind("algorithm,n,mode,wall_ms,scalar_muls,status\n", 0) == 0);
    CHECK(out.csv.find("berkowitz,16,tree-parallel") != std::string::npos);
    CHECK(out.csv.find("skipped: TooLarge") != std::string::npos);  // oracle at n = 16
    // every berkowitz/csanky row is ok
    std::istringstream lines(out.csv);
    std::string line;
    std::getline(lines, line);
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      if (line.rfind("oracle", 0) != 0) CHECK(line.find(",ok") != std::string::npos);
    }
    CHECK(rows >= 6);
  }
}
