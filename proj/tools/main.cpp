// Command-line surface: parse matrices, run the characteristic-polynomial
// algorithms, cross-verify the property corpus, emit verified witnesses,
// and benchmark the product modes.
//
// Exit codes: 0 success, 1 property/verification failure, 2 usage or
// precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "exalg/bench.hpp"
#include "exalg/io.hpp"

namespace {

using namespace exalg;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field = "q";
  std::string alg = "berkowitz";
  std::string format = "plain";
  std::string input_path;  // empty = stdin
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t max_dim = 5;
  bool parallel = false;
  std::size_t index = 1;  // krylov column
  std::size_t m = 4;      // powers length
};

void add_common_options(CLI::App* cmd, Options* opt) {
  cmd->add_option("--field", opt->field, "coefficient field: q or gf:<p>");
  cmd->add_option("--seed", opt->seed, "random seed");
  cmd->add_option("--count", opt->count, "random cases per property");
  cmd->add_option("--max-dim", opt->max_dim, "largest matrix dimension");
  cmd->add_flag("--parallel", opt->parallel, "evaluate tree subproducts concurrently");
}

std::string slurp_input(const Options& opt) {
  if (opt.input_path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(opt.input_path);
  if (!in) fail(Errc::ParseError, "cannot open input file '" + opt.input_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "json") return Format::json;
  fail(Errc::ParseError, "bad format '" + s + "' (want plain or json)");
}

RunConfig config_from(const Options& opt) {
  RunConfig cfg;
  cfg.field = parse_field(opt.field);
  cfg.seed = opt.seed;
  cfg.count = opt.count;
  cfg.max_dim = opt.max_dim;
  cfg.parallel = opt.parallel;
  if (opt.alg == "csanky")
    cfg.alg = AlgSel::csanky;
  else if (opt.alg == "berkowitz")
    cfg.alg = AlgSel::berkowitz;
  else if (opt.alg == "oracle")
    cfg.alg = AlgSel::oracle;
  else if (opt.alg == "all")
    cfg.alg = AlgSel::all;
  else
    fail(Errc::ParseError, "bad algorithm '" + opt.alg + "'");
  return cfg;
}

std::vector<Alg> algorithms_for(const Options& opt) {
  if (opt.alg == "all") return {Alg::berkowitz, Alg::csanky, Alg::oracle};
  if (opt.alg == "csanky") return {Alg::csanky};
  if (opt.alg == "berkowitz") return {Alg::berkowitz};
  if (opt.alg == "oracle") return {Alg::oracle};
  fail(Errc::ParseError, "bad algorithm '" + opt.alg + "'");
}

int run_compute(const std::string& what, const Options& opt) {
  Field F = parse_field(opt.field);
  Format fmt = parse_format(opt.format);
  Matrix a = parse_matrix(F, slurp_input(opt), fmt);
  std::vector<Alg> algs = algorithms_for(opt);

  // --parallel routes Berkowitz through the concurrent tree mode, whose
  // output is contractually bit-identical to the sequential fold.
  auto charpoly_by = [&](Alg alg) {
    if (alg == Alg::berkowitz && opt.parallel)
      return berkowitz(a, ProductMode::tree, true).poly;
    return charpoly(a, alg).poly;
  };

  if (what == "charpoly") {
    std::optional<Poly> result;
    std::optional<Error> first_error;
    for (Alg alg : algs) {
      try {
        Poly p = charpoly_by(alg);
        if (result && !(*result == p))
          throw VerificationFailure("algorithms disagree on the characteristic polynomial");
        result = std::move(p);
      } catch (const Error& e) {
        if (algs.size() == 1) throw;
        if (!first_error) first_error = e;
      }
    }
    if (!result) throw *first_error;
    std::cout << serialize(*result) << "\n";
    return 0;
  }

  // det / adj / inv share the per-algorithm cross-check shape.
  auto cross_check = [&](auto compute_one, auto print) {
    using Value = decltype(compute_one(algs[0]));
    std::optional<Value> result;
    std::optional<Error> first_error;
    for (Alg alg : algs) {
      try {
        Value v = compute_one(alg);
        if (result && !(*result == v))
          throw VerificationFailure("algorithms disagree on the result");
        result = std::move(v);
      } catch (const Error& e) {
        if (e.code() == Errc::Singular || algs.size() == 1) throw;
        if (!first_error) first_error = e;
      }
    }
    if (!result) throw *first_error;
    print(*result);
  };

  if (what == "det") {
    cross_check([&](Alg alg) { return determinant(a, alg); },
                [](const Scalar& d) { std::cout << d.str() << "\n"; });
  } else if (what == "adj") {
    cross_check([&](Alg alg) { return adjoint(a, alg); },
                [&](const Matrix& m) { std::cout << serialize(m, fmt); });
  } else if (what == "inv") {
    cross_check([&](Alg alg) { return inverse(a, alg); },
                [&](const Matrix& m) { std::cout << serialize(m, fmt); });
  } else {
    fail(Errc::ParseError, "bad compute target '" + what + "'");
  }
  return 0;
}

int run_witness(const std::string& kind, const Options& opt) {
  Field F = parse_field(opt.field);
  Format fmt = parse_format(opt.format);
  std::string text = slurp_input(opt);

  if (kind == "annihilator") {
    Matrix a = parse_matrix(F, text, fmt);
    Poly p = annihilating_poly(a);
    if (!eval_matrix(p, a).is_zero())
      throw VerificationFailure("annihilator failed its own check");
    std::cout << serialize(p) << "\n" << "p(A) = 0 verified\n";
    return 0;
  }
  if (kind == "invzero") {
    Matrix a = parse_matrix(F, text, fmt);
    InverseOrZero w = inverse_or_zero_divisor(a);
    if (w.b.is_zero()) throw VerificationFailure("witness B is zero");
    Matrix ab = a * w.b;
    if (w.kind == InverseOrZero::Kind::Inverse) {
      if (!(ab == Matrix::identity(F, a.rows())))
        throw VerificationFailure("A*B != I for the inverse witness");
      std::cout << "Inverse\n" << serialize(w.b, fmt) << "A*B = I verified\n";
    } else {
      if (!ab.is_zero()) throw VerificationFailure("A*B != 0 for the zero-divisor witness");
      std::cout << "ZeroDivisor\n" << serialize(w.b, fmt) << "A*B = 0 verified\n";
    }
    return 0;
  }
  if (kind == "steinitz") {
    std::vector<Matrix> ms = parse_matrices(F, text, fmt);
    if (ms.size() != 2) fail(Errc::ParseError, "steinitz needs two matrices (T then E)");
    SteinitzResult r = steinitz_exchange(ms[0], ms[1]);
    if (rank(r.t_prime) != ms[0].rows())
      throw VerificationFailure("exchanged set is not total");
    std::cout << "F = {";
    for (std::size_t i = 0; i < r.f.size(); ++i) std::cout << (i ? ", " : "") << r.f[i];
    std::cout << "}\n" << serialize(r.t_prime, fmt);
    std::cout << "rank(T') = " << ms[0].rows() << " verified (total)\n";
    return 0;
  }
  if (kind == "powers") {
    Matrix a = parse_matrix(F, text, fmt);
    std::vector<Matrix> ps = pow_via_inverse(a, opt.m);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (!(ps[i] == power(a, i)))
        throw VerificationFailure("power list disagrees with repeated multiplication");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::cout << "A^" << i << ":\n" << serialize(ps[i], fmt);
    }
    std::cout << "matches repeated multiplication for m = " << opt.m << " verified\n";
    return 0;
  }
  if (kind == "krylov") {
    Matrix a = parse_matrix(F, text, fmt);
    KrylovResult r = krylov_local_poly(a, opt.index);
    Matrix gi = eval_matrix(r.g, a) * unit_column(F, a.rows(), opt.index);
    if (!gi.is_zero()) throw VerificationFailure("g(A) e_i != 0");
    std::cout << "k=" << r.k << ", g=" << serialize(r.g) << "\n"
              << "g(A)*e_" << opt.index << " = 0 verified\n";
    return 0;
  }
  fail(Errc::ParseError, "bad witness kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exalg: exact characteristic polynomials, determinants and witnesses"};
  app.require_subcommand(1);

  Options opt;
  std::string compute_what, witness_kind;

  CLI::App* compute = app.add_subcommand("compute", "charpoly/det/adj/inv of one matrix");
  compute->add_option("what", compute_what, "charpoly | det | adj | inv")->required();
  compute->add_option("--alg", opt.alg, "csanky | berkowitz | oracle | all");
  compute->add_option("--format", opt.format, "plain | json");
  compute->add_option("--in", opt.input_path, "input file (default: stdin)");
  add_common_options(compute, &opt);

  CLI::App* verify = app.add_subcommand("verify", "run the randomized property corpus");
  verify->add_option("--alg", opt.alg, "csanky | berkowitz | oracle | all")->default_val("all");
  add_common_options(verify, &opt);

  CLI::App* witness = app.add_subcommand("witness", "emit a verified construction");
  witness->add_option("kind", witness_kind, "annihilator | invzero | steinitz | powers | krylov")
      ->required();
  witness->add_option("--format", opt.format, "plain | json");
  witness->add_option("--in", opt.input_path, "input file (default: stdin)");
  witness->add_option("--index", opt.index, "basis column for krylov (1-based)");
  witness->add_option("--m", opt.m, "power-list length for powers");
  add_common_options(witness, &opt);

  CLI::App* bench = app.add_subcommand("bench", "time algorithms and product modes (CSV)");
  bench->add_option("--max-dim", opt.max_dim, "largest benchmarked dimension")->default_val(16);
  bench->add_option("--field", opt.field, "coefficient field: q or gf:<p>");
  bench->add_option("--seed", opt.seed, "random seed");
  bench->add_flag("--parallel", opt.parallel, "also run the concurrent tree mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(compute)) return run_compute(compute_what, opt);
    if (app.got_subcommand(witness)) return run_witness(witness_kind, opt);
    if (app.got_subcommand(verify)) {
      VerifyReport report = run_verify(config_from(opt));
      std::cout << report.text;
      return report.all_ok ? 0 : 1;
    }
    if (app.got_subcommand(bench)) {
      BenchOutput out = run_bench(config_from(opt));
      std::cout << out.csv;
      if (!out.all_equal) {
        std::cerr << "error: product modes disagree (bit-exactness violated)\n";
        return 1;
      }
      return 0;
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const exalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
