#include "iwk/cyclo_eval.hpp"

#include <set>

#include "iwk/error.hpp"
#include "iwk/int_matrix.hpp"
#include "iwk/lambda_ring.hpp"

namespace iwk {

std::string ExtendedValuation::to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

CyclotomicPoint at_eps(const PrimeContext& ctx, int m, const LambdaElement& f) {
  return CyclotomicPoint{m, f.rem(cyclotomic_phi(ctx, m))};
}

mpz_class cyclotomic_resultant(const PrimeContext& ctx, int m, const LambdaElement& f) {
  if (m == 0) return f.coeff(0);
  const LambdaElement phi = cyclotomic_phi(ctx, m);
  const auto d = static_cast<std::size_t>(phi.degree());
  // Column j holds X^j·f mod Φ_m in the power basis.
  IntMatrix mult(d, d);
  LambdaElement col = f.rem(phi);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) mult(i, j) = col.coeff(i);
    if (j + 1 < d) col = (LambdaElement::x() * col).rem(phi);
  }
  return mult.determinant();
}

ExtendedValuation ord_eps(const PrimeContext& ctx, int m, const LambdaElement& f) {
  if (m < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
  const mpz_class res = cyclotomic_resultant(ctx, m, f);
  if (res == 0) return ExtendedValuation::infinity();
  mpz_class rest;
  const mpz_class p = static_cast<long>(ctx.p());
  return ExtendedValuation(static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), res.get_mpz_t(), p.get_mpz_t())));
}

ExtendedValuation det_ord_at_eps(const PrimeContext& ctx, int m, const LambdaMatrix& a) {
  return ord_eps(ctx, m, a.det());
}

int matrix_rank_at_eps(const PrimeContext& ctx, int m, const LambdaMatrix& a) {
  const LambdaElement phi = cyclotomic_phi(ctx, m);
  if (a.reduce(phi).is_zero()) return 0;
  return a.det().divisible_by(phi) ? 1 : 2;
}

RationalPoly crt_interpolate(const PrimeContext& ctx, const std::vector<CrtPoint>& points) {
  std::set<int> seen;
  for (const auto& pt : points) {
    if (pt.level < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
    if (!seen.insert(pt.level).second) {
      throw Error(ErrorKind::DuplicateLevel, "level " + std::to_string(pt.level) + " appears twice");
    }
  }
  // Incremental CRT: F ≡ x_i mod Φ_{m_i} for the points so far, M = ∏ Φ_{m_i}.
  QPoly f;
  QPoly modulus(std::vector<mpq_class>{mpq_class(1)});
  for (const auto& pt : points) {
    const QPoly phi(cyclotomic_phi(ctx, pt.level));
    const QPoly gap = (pt.value.to_qpoly() - f).rem(phi);
    const QPoly t = (gap * inverse_mod(modulus.rem(phi), phi)).rem(phi);
    f += modulus * t;
    modulus = modulus * phi;
  }
  return RationalPoly(f);
}

mpz_class common_denominator(const std::vector<RationalPoly>& polys) {
  mpz_class d = 1;
  for (const auto& f : polys) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), f.denominator().get_mpz_t());
  return d;
}

}  // namespace iwk
