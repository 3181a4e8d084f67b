#include "iwk/special_matrices.hpp"

#include <array>

#include "iwk/cyclo_eval.hpp"
#include "iwk/error.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_ring.hpp"
#include "iwk/zp_modules.hpp"
#include "tower_spans.hpp"

namespace iwk {

ColemanData::ColemanData(LambdaMatrix col_plus, LambdaMatrix col_minus)
    : plus_(std::move(col_plus)), minus_(std::move(col_minus)) {
  const LambdaElement x = LambdaElement::x();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!plus_.at(i, j).divisible_by(x)) {
        throw Error(ErrorKind::InvalidInput, "col_plus entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") is not divisible by X (image constraint)");
      }
    }
  }
  if (plus_.det().is_zero()) throw Error(ErrorKind::DegenerateColeman, "det col_plus = 0");
  if (minus_.det().is_zero()) throw Error(ErrorKind::DegenerateColeman, "det col_minus = 0");
}

ColemanData ColemanData::transformed(const LambdaMatrix& b) const { return ColemanData(plus_ * b, minus_ * b); }

SpecialReport is_special(const PrimeContext& ctx, const LambdaMatrix& a, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
  SpecialReport rep;
  rep.n = n;
  for (int m = 0; m <= n; ++m) {
    const LambdaElement phi = cyclotomic_phi(ctx, m);
    SpecialLevel lvl;
    lvl.m = m;
    lvl.det_divisible = a.det().divisible_by(phi);
    lvl.columns_divisible = static_cast<int>(a.column_divisible_by(0, phi)) + static_cast<int>(a.column_divisible_by(1, phi));
    lvl.ok = !lvl.det_divisible || lvl.columns_divisible >= 1;
    rep.verdict = rep.verdict && lvl.ok;
    rep.per_level.push_back(lvl);
  }
  return rep;
}

BDFactorization factor_bd(const PrimeContext& ctx, const LambdaMatrix& a, int n) {
  const SpecialReport rep = is_special(ctx, a, n);
  if (!rep.verdict) {
    for (const auto& lvl : rep.per_level) {
      if (!lvl.ok) {
        throw Error(ErrorKind::NotSpecial, "Phi_" + std::to_string(lvl.m) + " divides det A but no column of A");
      }
    }
  }
  std::array<LambdaElement, 2> d{LambdaElement::constant(1), LambdaElement::constant(1)};
  for (int m = 0; m <= n - 1; ++m) {
    const LambdaElement phi = cyclotomic_phi(ctx, m);
    for (int j = 0; j < 2; ++j) {
      if (a.column_divisible_by(j, phi)) d[j] *= phi;
    }
  }
  // Distinct Φ_m are coprime monic irreducibles, so each column is divisible by their product.
  LambdaMatrix b(a.at(0, 0).exact_div(d[0]), a.at(0, 1).exact_div(d[1]), a.at(1, 0).exact_div(d[0]),
                 a.at(1, 1).exact_div(d[1]));
  return BDFactorization{std::move(b), LambdaMatrix::diag(d[0], d[1])};
}

LambdaMatrix assemble_fn(const PrimeContext& ctx, const ColemanData& cd, int n) {
  const OmegaTower t = omega_tower(ctx, n);
  return t.omega_tilde_plus * cd.col_minus() + t.omega_tilde_minus * cd.col_plus();
}

ParityReport parity_congruence_check(const PrimeContext& ctx, const ColemanData& cd, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
  ParityReport rep;
  rep.n = n;
  const LambdaMatrix f = assemble_fn(ctx, cd, n);
  for (int m = 0; m <= n; ++m) {
    const LambdaElement phi = cyclotomic_phi(ctx, m);
    ParityLevel lvl;
    lvl.m = m;
    lvl.uses_minus = m == 0 || m % 2 == 1;
    const LambdaMatrix fm = f.reduce(phi);
    const LambdaMatrix cm = (lvl.uses_minus ? cd.col_minus() : cd.col_plus()).reduce(phi);
    // F(ε_m) = c·C(ε_m) with c ≠ 0 iff both vanish together and the two
    // flattened matrices span a line: every cross product vanishes mod Φ_m.
    bool line = fm.is_zero() == cm.is_zero();
    for (int i = 0; i < 4 && line; ++i) {
      for (int j = i + 1; j < 4 && line; ++j) {
        const LambdaElement cross = fm.at(i / 2, i % 2) * cm.at(j / 2, j % 2) - fm.at(j / 2, j % 2) * cm.at(i / 2, i % 2);
        line = cross.divisible_by(phi);
      }
    }
    lvl.proportional = line;
    rep.passed = rep.passed && line;
    rep.per_level.push_back(lvl);
  }
  return rep;
}

namespace {

bool det_coprime_to_omega(const PrimeContext& ctx, const LambdaElement& det, int n) {
  for (int m = 0; m <= n; ++m) {
    if (det.divisible_by(cyclotomic_phi(ctx, m))) return false;
  }
  return true;
}

}  // namespace

GoodBasis good_basis_transform(const PrimeContext& ctx, const ColemanData& cd, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
  if (cd.col_plus().det().is_zero() || cd.col_minus().det().is_zero()) {
    throw Error(ErrorKind::DegenerateColeman, "Coleman determinant vanishes");
  }
  GoodBasis out;
  out.denominator = 1;
  const LambdaMatrix f = assemble_fn(ctx, cd, n_max);
  for (int m = 0; m <= n_max; ++m) {
    if (matrix_rank_at_eps(ctx, m, f) == 1) out.exceptional_levels.push_back(m);
  }
  if (out.exceptional_levels.empty()) {
    out.b = LambdaMatrix::identity();
    return out;
  }

  // Per level: an invertible matrix over Q(ζ_{p^m}) whose first column lies
  // in ker F(ε_m). Only exceptional levels need one.
  const int top = out.exceptional_levels.back();
  std::array<std::vector<CrtPoint>, 4> entry_points;
  for (int m = 0; m <= top; ++m) {
    const LambdaElement phi = cyclotomic_phi(ctx, m);
    LambdaMatrix bm = LambdaMatrix::identity();
    if (matrix_rank_at_eps(ctx, m, f) == 1) {
      const LambdaMatrix fm = f.reduce(phi);
      const int row = !fm.at(0, 0).is_zero() ? 0 : (!fm.at(1, 0).is_zero() ? 1 : -1);
      if (row >= 0) bm = LambdaMatrix(fm.at(row, 1), LambdaElement::constant(1), -fm.at(row, 0), LambdaElement{});
    }
    for (int e = 0; e < 4; ++e) entry_points[e].push_back(CrtPoint{m, RationalPoly(bm.at(e / 2, e % 2))});
  }
  std::array<RationalPoly, 4> crt;
  for (int e = 0; e < 4; ++e) crt[e] = crt_interpolate(ctx, entry_points[e]);
  out.denominator = common_denominator({crt.begin(), crt.end()});
  std::array<LambdaElement, 4> ent;
  for (int e = 0; e < 4; ++e) {
    mpz_class scale = out.denominator;
    mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), crt[e].denominator().get_mpz_t());
    ent[e] = crt[e].numerator() * scale;
  }
  LambdaMatrix b(ent[0], ent[1], ent[2], ent[3]);

  // Repair levels above the exceptional range without disturbing lower ones.
  for (int m = top; m < n_max; ++m) {
    const LambdaElement next = cyclotomic_phi(ctx, m + 1);
    if (!b.det().divisible_by(next)) continue;
    const LambdaElement w = omega(ctx, m);
    const long p = static_cast<long>(ctx.p());
    bool fixed = false;
    for (long code = 1; code < p * p * p * p && !fixed; ++code) {
      // Lexicographic over (α, γ, β, δ) ∈ {0..p−1}^4.
      const long alpha = code / (p * p * p);
      const long gamma = (code / (p * p)) % p;
      const long beta = (code / p) % p;
      const long delta = code % p;
      const LambdaMatrix c(LambdaElement::constant(alpha), LambdaElement::constant(gamma),
                           LambdaElement::constant(beta), LambdaElement::constant(delta));
      LambdaMatrix cand = b + w * c;
      if (!cand.det().divisible_by(next)) {
        b = std::move(cand);
        fixed = true;
      }
    }
    if (!fixed) throw Error(ErrorKind::InvalidInput, "no correction found at level " + std::to_string(m + 1));
    out.corrected_levels.push_back(m + 1);
  }
  out.b = std::move(b);
  return out;
}

bool is_good_basis(const PrimeContext& ctx, const ColemanData& cd, const LambdaMatrix& b, int n_max) {
  if (!det_coprime_to_omega(ctx, b.det(), n_max)) return false;
  for (int n = 1; n <= n_max; ++n) {
    if (!is_special(ctx, assemble_fn(ctx, cd, n) * b, n).verdict) return false;
  }
  return true;
}

RodReport rod_check(const PrimeContext& ctx, const LambdaMatrix& b, int n, int test_level) {
  if (n < 0 || test_level <= n) throw Error(ErrorKind::InvalidInput, "need 0 <= n < test_level");
  if (!det_coprime_to_omega(ctx, b.det(), n)) {
    throw Error(ErrorKind::NotCoprime, "det B shares a factor Phi_m (m <= n) with omega_n");
  }
  const LambdaPresentation rel = LambdaPresentation::from_matrix(b);
  const auto top = static_cast<std::size_t>(ctx.pow(test_level));
  const auto low = static_cast<std::size_t>(ctx.pow(n));

  // ⟨B⟩_n has finite index in Λ_n²; its colength bounds how much precision
  // the mod-p^k kernel loses.
  const QuotientInvariants qi =
      quotient_invariants(ctx, SpanPresentation(2 * low, detail::relation_span(ctx, rel, n, low)));
  const int work = ctx.refined().precision() + static_cast<int>(qi.torsion_length.length);
  const PrimeContext wctx = ctx.with_precision(work);

  // x ↦ G_B x is the span ⟨B⟩ in Λ_T²; H = (reduction to Λ_n²) ∘ G_B.
  const IntMatrix g = detail::relation_span(ctx, rel, test_level, top);
  const IntMatrix h = detail::relation_span(ctx, rel, n, top);
  const IntMatrix inter = (g * kernel_generators(wctx, h)).reduced(wctx.modulus());

  LambdaPresentation scaled = rel;
  const LambdaElement w = omega(ctx, n);
  for (auto& col : scaled.columns) {
    for (auto& e : col) e = w * e;
  }
  const IntMatrix j = detail::relation_span(ctx, scaled, test_level, top);
  const std::size_t rank = j.rank();

  const SpanPresentation is(2 * top, inter);
  const SpanPresentation js(2 * top, j);
  const SpanReading i_coarse = read_span(ctx, is);
  const SpanReading j_coarse = read_span(ctx, js);
  RodReport rep;
  rep.intersection_length = i_coarse.length();
  rep.scaled_span_length = j_coarse.length();
  rep.stable = readings_agree(i_coarse, read_span(ctx.refined(), is), rank) &&
               readings_agree(j_coarse, read_span(ctx.refined(), js), rank);
  rep.holds = rep.stable && rep.intersection_length == rep.scaled_span_length;
  return rep;
}

}  // namespace iwk
