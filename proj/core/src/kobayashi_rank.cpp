#include "iwk/kobayashi_rank.hpp"

#include <algorithm>

#include "iwk/cyclo_eval.hpp"
#include "iwk/error.hpp"
#include "iwk/int_matrix.hpp"
#include "iwk/lambda_ring.hpp"
#include "iwk/special_matrices.hpp"
#include "iwk/zp_modules.hpp"
#include "tower_spans.hpp"

namespace iwk {
using detail::relation_span;

namespace {

void require_positive_level(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "tower level n must be at least 1");
}

// Columns {ω_{n−1} X^i e_t} of ω_{n−1}Λ_n^k; i < p^n − p^{n−1} suffices and
// needs no reduction.
IntMatrix lower_kernel_span(const PrimeContext& ctx, std::size_t k, int n) {
  const auto size = static_cast<std::size_t>(ctx.pow(n));
  const auto count = static_cast<std::size_t>(ctx.totient(n));
  const LambdaElement w = omega(ctx, n - 1);
  IntMatrix g(k * size, k * count);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t c = 0; c < w.coeffs().size(); ++c) g(t * size + i + c, t * count + i) = w.coeffs()[c];
    }
  }
  return g;
}

LambdaElement determinant_of(const std::vector<std::vector<LambdaElement>>& cols, std::vector<std::size_t>& rows,
                             std::size_t col) {
  if (rows.empty()) return LambdaElement::constant(1);
  LambdaElement acc;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const LambdaElement& e = cols[col][rows[idx]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest = rows;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    LambdaElement term = e * determinant_of(cols, rest, col + 1);
    if (idx % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

void NablaResult::attach_closed_form(std::int64_t value, bool report_agreement) {
  closed_form = value;
  if (report_agreement) {
    agrees = nabla == value;
  } else {
    agrees.reset();
  }
}

LambdaPresentation LambdaPresentation::cyclic(const LambdaElement& f) { return LambdaPresentation{1, {{f}}}; }

LambdaPresentation LambdaPresentation::from_matrix(const LambdaMatrix& a) {
  return LambdaPresentation{2, {{a.at(0, 0), a.at(1, 0)}, {a.at(0, 1), a.at(1, 1)}}};
}

LambdaPresentation LambdaPresentation::direct_sum(const LambdaPresentation& other) const {
  LambdaPresentation out;
  out.ambient = ambient + other.ambient;
  for (const auto& c : columns) {
    auto col = c;
    col.resize(out.ambient);
    out.columns.push_back(std::move(col));
  }
  for (const auto& c : other.columns) {
    std::vector<LambdaElement> col(ambient);
    col.insert(col.end(), c.begin(), c.end());
    out.columns.push_back(std::move(col));
  }
  return out;
}

LambdaElement LambdaPresentation::determinant() const {
  if (!is_square()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square presentation");
  std::vector<std::size_t> rows(ambient);
  for (std::size_t i = 0; i < ambient; ++i) rows[i] = i;
  return determinant_of(columns, rows, 0);
}

std::size_t LambdaPresentation::generic_rank() const {
  const std::size_t full = std::min(ambient, columns.size());
  long max_deg = 0;
  for (const auto& c : columns) {
    for (const auto& e : c) max_deg = std::max(max_deg, e.degree());
  }
  // A nonzero minor has degree ≤ full·max_deg, so it survives at one of
  // that many + 1 distinct evaluation points.
  const long points = static_cast<long>(full) * max_deg + 1;
  std::size_t best = 0;
  for (long x = 0; x < points + 1 && best < full; ++x) {
    IntMatrix m(ambient, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (std::size_t i = 0; i < ambient; ++i) m(i, j) = columns[j][i].evaluate(x + 2);
    }
    best = std::max(best, m.rank());
  }
  return best;
}

NablaResult nabla_brute_force(const PrimeContext& ctx, const LambdaPresentation& relations, int n) {
  require_positive_level(n);
  for (const auto& c : relations.columns) {
    if (c.size() != relations.ambient) throw Error(ErrorKind::InvalidInput, "relation column has wrong length");
  }
  const std::size_t k = relations.ambient;
  const auto size = static_cast<std::size_t>(ctx.pow(n));
  const SpanPresentation u(k * size, relation_span(ctx, relations, n, size));
  const SpanPresentation v = u.joined(SpanPresentation(k * size, lower_kernel_span(ctx, k, n)));
  const LengthReport ker = nested_span_quotient_length(ctx, v, u);
  if (!ker.stable) {
    throw Error(ErrorKind::PrecisionUnstable, "kernel length at level " + std::to_string(n) +
                                                  " is not certified at N=" + std::to_string(ctx.precision()));
  }
  const std::size_t lower_size = static_cast<std::size_t>(ctx.pow(n - 1));
  const std::size_t lower_rel_rank = relation_span(ctx, relations, n - 1, lower_size).rank();

  NablaResult r;
  r.n = n;
  r.ker_length = ker.length;
  r.coker_length = 0;  // Λ_n^k → Λ_{n−1}^k is onto
  r.lower_rank = static_cast<std::int64_t>(k * lower_size - lower_rel_rank);
  r.nabla = r.ker_length - r.coker_length + r.lower_rank;
  return r;
}

NablaResult nabla_cyclic(const PrimeContext& ctx, const LambdaElement& f, int n) {
  require_positive_level(n);
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "cyclic tower needs f != 0");
  if (f.divisible_by(cyclotomic_phi(ctx, n))) {
    throw Error(ErrorKind::PhiDivides, "Phi_" + std::to_string(n) + " divides f");
  }
  NablaResult r = nabla_brute_force(ctx, LambdaPresentation::cyclic(f), n);
  r.attach_closed_form(ord_eps(ctx, n, f).value());
  return r;
}

int cyclic_stabilization_level(const PrimeContext& ctx, const LambdaElement& f) {
  const IwasawaInvariants inv = iwasawa_invariants(ctx, f);
  int n = 1;
  while (ctx.totient(n) <= inv.lambda) ++n;
  return n;
}

NablaResult nabla_torsion_tower(const PrimeContext& ctx, const LambdaPresentation& relations, int n) {
  validate_tower(TorsionTower{relations});
  NablaResult r = nabla_brute_force(ctx, relations, n);
  if (relations.is_square()) {
    const LambdaElement f = relations.determinant();
    const IwasawaInvariants inv = iwasawa_invariants(ctx, f);
    const bool cyclic = relations.ambient == 1;
    r.attach_closed_form(inv.lambda + ctx.totient(n) * inv.mu,
                         cyclic && n >= cyclic_stabilization_level(ctx, f));
  }
  return r;
}

TorsionSweep torsion_tower_sweep(const PrimeContext& ctx, const LambdaPresentation& relations, int n_max) {
  validate_tower(TorsionTower{relations});
  TorsionSweep sweep;
  std::optional<LambdaElement> det;
  if (relations.is_square()) det = relations.determinant();
  for (int n = 1; n <= n_max; ++n) {
    // Levels with Φ_n | det carry an infinite kernel.
    if (det && det->divisible_by(cyclotomic_phi(ctx, n))) continue;
    try {
      sweep.levels.push_back(nabla_torsion_tower(ctx, relations, n));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UndefinedRank) throw;
    }
  }
  if (!det) return sweep;
  // Least level from which agreement holds through the top, over ≥ 2 levels.
  std::size_t start = sweep.levels.size();
  while (start > 0 && sweep.levels[start - 1].nabla == *sweep.levels[start - 1].closed_form) --start;
  if (sweep.levels.size() - start >= 2) {
    sweep.stabilization_level = sweep.levels[start].n;
    for (std::size_t i = start; i < sweep.levels.size(); ++i) {
      if (!sweep.levels[i].agrees) sweep.levels[i].agrees = true;
    }
  }
  return sweep;
}

NablaResult nabla_matrix_tower(const PrimeContext& ctx, const LambdaMatrix& a, int n) {
  validate_tower(MatrixTower{a});
  NablaResult r = nabla_brute_force(ctx, LambdaPresentation::from_matrix(a), n);
  if (is_special(ctx, a, n).verdict && !a.det().divisible_by(cyclotomic_phi(ctx, n))) {
    r.attach_closed_form(det_ord_at_eps(ctx, n, a).value());
  }
  return r;
}

std::optional<std::int64_t> coleman_closed_form(const PrimeContext& ctx, const ColemanData& cd, int n) {
  require_positive_level(n);
  const OmegaTildeDegrees deg = omega_tilde_degrees(ctx, n);
  const bool odd = n % 2 == 1;
  const ExtendedValuation ord = ord_eps(ctx, n, odd ? cd.col_minus().det() : cd.col_plus().det());
  if (ord.is_infinite()) return std::nullopt;
  return 2 * (odd ? deg.plus : deg.minus) + ord.value();
}

NablaResult nabla_coleman_tower(const PrimeContext& ctx, const ColemanData& cd, int n) {
  require_positive_level(n);
  const LambdaMatrix f = assemble_fn(ctx, cd, n);
  NablaResult r = nabla_matrix_tower(ctx, f, n);
  r.closed_form.reset();
  r.agrees.reset();
  if (is_special(ctx, f, n).verdict) {
    if (auto closed = coleman_closed_form(ctx, cd, n)) r.attach_closed_form(*closed);
  }
  return r;
}

LambdaPresentation presentation_of(const TowerSpec& tower) {
  struct Visitor {
    LambdaPresentation operator()(const CyclicTower& t) const { return LambdaPresentation::cyclic(t.f); }
    LambdaPresentation operator()(const TorsionTower& t) const { return t.relations; }
    LambdaPresentation operator()(const MatrixTower& t) const { return LambdaPresentation::from_matrix(t.a); }
  };
  return std::visit(Visitor{}, tower);
}

void validate_tower(const TowerSpec& tower) {
  if (const auto* c = std::get_if<CyclicTower>(&tower)) {
    if (c->f.is_zero()) throw Error(ErrorKind::ZeroElement, "cyclic tower needs f != 0");
  } else if (const auto* t = std::get_if<TorsionTower>(&tower)) {
    if (t->relations.ambient == 0) return;
    if (t->relations.generic_rank() != t->relations.ambient) {
      throw Error(ErrorKind::NotTorsion, "relation matrix does not have full rank over Frac(Lambda)");
    }
  } else if (const auto* m = std::get_if<MatrixTower>(&tower)) {
    if (m->a.det().is_zero()) throw Error(ErrorKind::SingularMatrix, "det A = 0");
  }
}

AdditivityReport additivity_check(const PrimeContext& ctx, const TowerSpec& left, const TowerSpec& right, int n) {
  validate_tower(left);
  validate_tower(right);
  const LambdaPresentation l = presentation_of(left);
  const LambdaPresentation r = presentation_of(right);
  AdditivityReport rep;
  rep.left = nabla_brute_force(ctx, l, n);
  rep.right = nabla_brute_force(ctx, r, n);
  rep.sum = nabla_brute_force(ctx, l.direct_sum(r), n);
  rep.holds = rep.sum.nabla == rep.left.nabla + rep.right.nabla;
  return rep;
}

}  // namespace iwk
