#include "exalg/verify.hpp"

#include <sstream>

#include "exalg/io.hpp"

namespace exalg {

Matrix random_matrix(SplitMix64& rng, const Field& F, std::size_t m, std::size_t n) {
  std::vector<Scalar> e;
  e.reserve(m * n);
  for (std::size_t i = 0; i < m * n; ++i) {
    if (F.is_rationals())
      e.push_back(F.from_integer(rng.in_range(-5, 5)));
    else
      e.push_back(F.from_residue(rng.below(F.modulus())));
  }
  return Matrix::from_entries(F, m, n, std::move(e));
}

Poly random_monic(SplitMix64& rng, const Field& F, std::size_t degree) {
  std::vector<Scalar> c;
  c.reserve(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) {
    if (F.is_rationals())
      c.push_back(F.from_integer(rng.in_range(-5, 5)));
    else
      c.push_back(F.from_residue(rng.below(F.modulus())));
  }
  c.push_back(F.one());
  return Poly::from_coeffs(F, std::move(c));
}

Matrix random_invertible(SplitMix64& rng, const Field& F, std::size_t n) {
  Matrix p = Matrix::identity(F, n);
  std::size_t ops = 2 * n + 1;
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t kind = rng.below(3);
    std::size_t i = 1 + rng.below(n);
    std::size_t j = 1 + rng.below(n);
    if (kind == 0 && i != j) {
      // row_i += c * row_j
      Scalar c = F.is_rationals() ? F.from_integer(rng.in_range(-3, 3))
                                  : F.from_residue(rng.below(F.modulus()));
      Matrix el = Matrix::build(F, n, n, [&](std::size_t r, std::size_t s) {
        if (r == s) return F.one();
        if (r == i && s == j) return c;
        return F.zero();
      });
      p = el * p;
    } else if (kind == 1 && i != j) {
      // swap rows i and j
      Matrix el = Matrix::build(F, n, n, [&](std::size_t r, std::size_t s) {
        if (r == i) return s == j ? F.one() : F.zero();
        if (r == j) return s == i ? F.one() : F.zero();
        return r == s ? F.one() : F.zero();
      });
      p = el * p;
    } else {
      // scale row i by a nonzero constant
      Scalar c = F.is_rationals()
                     ? F.from_integer(rng.in_range(1, 3))
                     : F.from_residue(1 + rng.below(F.modulus() - 1));
      Matrix el = Matrix::build(F, n, n, [&](std::size_t r, std::size_t s) {
        if (r != s) return F.zero();
        return r == i ? c : F.one();
      });
      p = el * p;
    }
  }
  return p;
}

namespace {

using Status = PropertyResult::Status;

std::string counterexample(const std::string& what, const Matrix& a) {
  return what + "; offending matrix:\n" + serialize(a, Format::plain);
}

PropertyResult pass(const std::string& name, std::size_t cases) {
  return {name, Status::Pass, "(" + std::to_string(cases) + " cases)"};
}

PropertyResult skipped(const std::string& name, const std::string& why) {
  return {name, Status::Skip, "(" + why + ")"};
}

PropertyResult failed(const std::string& name, const std::string& detail) {
  return {name, Status::Fail, detail};
}

// Largest dimension the algorithm accepts over the field, 0 when even
// 2x2 inputs are out of reach (csanky over GF(2)).
std::size_t max_dim_for(Alg alg, const RunConfig& cfg) {
  std::size_t d = cfg.max_dim;
  if (alg == Alg::oracle && d > 8) d = 8;
  if (alg == Alg::csanky) {
    std::uint64_t ch = cfg.field.characteristic();
    if (ch != 0) {
      if (ch <= 2) return 0;
      if (d >= ch) d = ch - 1;
    }
  }
  return d;
}

bool alg_selected(Alg alg, AlgSel sel) {
  if (sel == AlgSel::all) return true;
  return (sel == AlgSel::csanky && alg == Alg::csanky) ||
         (sel == AlgSel::berkowitz && alg == Alg::berkowitz) ||
         (sel == AlgSel::oracle && alg == Alg::oracle);
}

Property agreement_property(Alg alg) {
  std::string name = std::string("charpoly-agreement[") + alg_name(alg) + "=oracle]";
  return {name, [name, alg](const RunConfig& cfg) {
            std::size_t d = std::min(max_dim_for(alg, cfg), max_dim_for(Alg::oracle, cfg));
            if (d == 0) return skipped(name, "characteristic too small for " + std::string(alg_name(alg)));
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 1 + rng.below(d);
              Matrix a = random_matrix(rng, cfg.field, n, n);
              if (!(charpoly(a, alg).poly == charpoly_oracle(a).poly))
                return failed(name, counterexample("case " + std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

Property cht_property(Alg alg) {
  std::string name = std::string("cayley-hamilton[") + alg_name(alg) + "]";
  return {name, [name, alg](const RunConfig& cfg) {
            std::size_t d = max_dim_for(alg, cfg);
            if (d == 0) return skipped(name, "characteristic too small for " + std::string(alg_name(alg)));
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 1 + rng.below(d);
              Matrix a = random_matrix(rng, cfg.field, n, n);
              if (!eval_matrix(charpoly(a, alg).poly, a).is_zero())
                return failed(name, counterexample("p_A(A) != 0 at case " + std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

Property csanky_newton_property() {
  std::string name = "csanky-newton-agreement";
  return {name, [name](const RunConfig& cfg) {
            std::size_t d = max_dim_for(Alg::csanky, cfg);
            if (d == 0) return skipped(name, "characteristic too small for csanky");
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 1 + rng.below(d);
              Matrix a = random_matrix(rng, cfg.field, n, n);
              if (!(csanky(a).poly == to_charpoly(newton_coeffs(a)).poly))
                return failed(name, counterexample("matrix-form/recurrence split at case " +
                                                       std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

Property similarity_property(Alg alg) {
  std::string name = std::string("similarity-invariance[") + alg_name(alg) + "]";
  return {name, [name, alg](const RunConfig& cfg) {
            std::size_t d = max_dim_for(alg, cfg);
            if (d == 0) return skipped(name, "characteristic too small for " + std::string(alg_name(alg)));
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 1 + rng.below(d);
              Matrix a = random_matrix(rng, cfg.field, n, n);
              Matrix p = random_invertible(rng, cfg.field, n);
              Matrix conj = p * a * inverse(p, Alg::berkowitz);
              if (!(charpoly(conj, alg).poly == charpoly(a, alg).poly))
                return failed(name, counterexample("charpoly changed under similarity at case " +
                                                       std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

Property block_factorization_property(Alg alg) {
  std::string name = std::string("block-factorization[") + alg_name(alg) + "]";
  return {name, [name, alg](const RunConfig& cfg) {
            std::size_t d = max_dim_for(alg, cfg);
            if (d < 2) return skipped(name, "characteristic too small for " + std::string(alg_name(alg)));
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 2 + rng.below(d - 1);
              std::size_t j = 1 + rng.below(n - 1);
              Matrix b = random_matrix(rng, cfg.field, j, j);
              Matrix dd = random_matrix(rng, cfg.field, n - j, n - j);
              Matrix cc = random_matrix(rng, cfg.field, n - j, j);
              Matrix a = block2x2(b, Matrix::zero(cfg.field, j, n - j), cc, dd);
              Poly expect = charpoly(b, alg).poly * charpoly(dd, alg).poly;
              if (!(charpoly(a, alg).poly == expect))
                return failed(name, counterexample("p_A != p_B * p_D at case " + std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

Property krylov_divisibility_property(Alg alg) {
  std::string name = std::string("krylov-divisibility[") + alg_name(alg) + "]";
  return {name, [name, alg](const RunConfig& cfg) {
            std::size_t d = max_dim_for(alg, cfg);
            if (d == 0) return skipped(name, "characteristic too small for " + std::string(alg_name(alg)));
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 1 + rng.below(d);
              Matrix a = random_matrix(rng, cfg.field, n, n);
              Poly p = charpoly(a, alg).poly;
              for (std::size_t i = 1; i <= n; ++i) {
                auto [q, r] = poly_divmod(p, krylov_local_poly(a, i).g);
                (void)q;
                if (!r.is_zero())
                  return failed(name, counterexample("g does not divide p_A at i = " +
                                                         std::to_string(i), a));
              }
            }
            return pass(name, cfg.count);
          }};
}

Property det_multiplicativity_property(Alg alg) {
  std::string name = std::string("det-multiplicativity[") + alg_name(alg) + "]";
  return {name, [name, alg](const RunConfig& cfg) {
            std::size_t d = max_dim_for(alg, cfg);
            if (d == 0) return skipped(name, "characteristic too small for " + std::string(alg_name(alg)));
            SplitMix64 rng = stream_for(cfg.seed, name);
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t n = 1 + rng.below(d);
              Matrix a = random_matrix(rng, cfg.field, n, n);
              Matrix b = random_matrix(rng, cfg.field, n, n);
              if (determinant(a * b, alg) != determinant(a, alg) * determinant(b, alg))
                return failed(name, counterexample("det(AB) != det(A)det(B) at case " +
                                                       std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

// Companion-series identity: sum_{i=2}^{k} c_{k-i} sum_{j=0}^{i-2}
// M^j S R M^{(i-2)-j} = -c_k I on the principal submatrix.
Property appendix_eq17_property() {
  std::string name = "companion-series-identity";
  return {name, [name](const RunConfig& cfg) {
            SplitMix64 rng = stream_for(cfg.seed, name);
            std::size_t kmax = std::max<std::size_t>(2, std::min<std::size_t>(cfg.max_dim, 6));
            for (std::size_t c = 0; c < cfg.count; ++c) {
              std::size_t k = 2 + rng.below(kmax - 1);
              Poly g = random_monic(rng, cfg.field, k);
              Matrix a = companion(companion_spec_of(g));
              auto [w, r, s, m] = split2x2(a, 1);
              (void)w;
              Matrix acc = Matrix::zero(cfg.field, k - 1, k - 1);
              for (std::size_t i = 2; i <= k; ++i) {
                Scalar cki = g.coeff(i);  // c_{k-i} is the x^i coefficient
                Matrix inner = Matrix::zero(cfg.field, k - 1, k - 1);
                for (std::size_t j = 0; j + 2 <= i; ++j)
                  inner = inner + power(m, j) * s * r * power(m, i - 2 - j);
                acc = acc + cki * inner;
              }
              Scalar ck = g.coeff(0);  // c_k is the constant coefficient
              if (!(acc == (-ck) * Matrix::identity(cfg.field, k - 1)))
                return failed(name, counterexample("series != -c_k I at case " + std::to_string(c), a));
            }
            return pass(name, cfg.count);
          }};
}

}  // namespace

std::vector<Property> standard_properties() {
  std::vector<Property> props;
  props.push_back(agreement_property(Alg::berkowitz));
  props.push_back(agreement_property(Alg::csanky));
  props.push_back(cht_property(Alg::berkowitz));
  props.push_back(cht_property(Alg::csanky));
  props.push_back(csanky_newton_property());
  props.push_back(similarity_property(Alg::berkowitz));
  props.push_back(similarity_property(Alg::csanky));
  props.push_back(block_factorization_property(Alg::berkowitz));
  props.push_back(block_factorization_property(Alg::csanky));
  props.push_back(krylov_divisibility_property(Alg::berkowitz));
  props.push_back(krylov_divisibility_property(Alg::csanky));
  props.push_back(det_multiplicativity_property(Alg::berkowitz));
  props.push_back(det_multiplicativity_property(Alg::csanky));
  props.push_back(appendix_eq17_property());
  return props;
}

VerifyReport run_properties(std::span<const Property> props, const RunConfig& cfg) {
  if (cfg.count < 1 || cfg.max_dim < 1)
    fail(Errc::BadIndex, "count and max-dim must be >= 1");
  VerifyReport report;
  std::ostringstream out;
  std::string alg_label = cfg.alg == AlgSel::all         ? "all"
                          : cfg.alg == AlgSel::csanky    ? "csanky"
                          : cfg.alg == AlgSel::berkowitz ? "berkowitz"
                                                         : "oracle";
  out << "verify: field=" << cfg.field.name() << " alg=" << alg_label << " seed=" << cfg.seed
      << " count=" << cfg.count << " max-dim=" << cfg.max_dim << "\n";
  std::size_t passed = 0, failed_count = 0, skipped_count = 0;
  for (const auto& prop : props) {
    PropertyResult r = prop.run(cfg);
    switch (r.status) {
      case Status::Pass:
        ++passed;
        out << "PASS " << r.name << " " << r.detail << "\n";
        break;
      case Status::Skip:
        ++skipped_count;
        out << "SKIP " << r.name << " " << r.detail << "\n";
        break;
      case Status::Fail:
        ++failed_count;
        out << "FAIL " << r.name << ": " << r.detail << "\n";
        break;
    }
    report.results.push_back(std::move(r));
  }
  out << "result: " << passed << " passed, " << failed_count << " failed, " << skipped_count
      << " skipped\n";
  report.all_ok = failed_count == 0;
  report.text = out.str();
  return report;
}

VerifyReport run_verify(const RunConfig& cfg) {
  std::vector<Property> props;
  for (auto& p : standard_properties()) {
    // Algorithm-tagged properties are filtered by the selection; the
    // untagged ones always run.
    bool keep = true;
    if (p.name.find("[csanky") != std::string::npos || p.name == "csanky-newton-agreement")
      keep = alg_selected(Alg::csanky, cfg.alg);
    else if (p.name.find("[berkowitz") != std::string::npos)
      keep = alg_selected(Alg::berkowitz, cfg.alg);
    if (keep) props.push_back(std::move(p));
  }
  return run_properties(props, cfg);
}

}  // namespace exalg
