#include "iwk/lambda_ring.hpp"

#include <limits>

#include "iwk/error.hpp"

namespace iwk {
namespace {

// (1+X)^e expanded by binomial coefficients.
LambdaElement one_plus_x_pow(std::int64_t e) {
  std::vector<mpz_class> c(static_cast<std::size_t>(e) + 1);
  c[0] = 1;
  for (std::int64_t k = 1; k <= e; ++k) {
    c[k] = c[k - 1] * (e - k + 1);
    mpz_divexact_ui(c[k].get_mpz_t(), c[k].get_mpz_t(), static_cast<unsigned long>(k));
  }
  return LambdaElement(std::move(c));
}

void require_level(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
}

}  // namespace

LambdaElement cyclotomic_phi(const PrimeContext& ctx, int m) {
  require_level(m);
  if (m == 0) return LambdaElement::x();
  // Σ_{k<p} Y^k with Y = (1+X)^{p^{m−1}}, by Horner.
  const LambdaElement y = one_plus_x_pow(ctx.pow(m - 1));
  LambdaElement acc = LambdaElement::constant(1);
  for (std::int64_t k = 1; k < ctx.p(); ++k) acc = acc * y + LambdaElement::constant(1);
  return acc;
}

LambdaElement omega(const PrimeContext& ctx, int n) {
  require_level(n);
  return one_plus_x_pow(ctx.pow(n)) - LambdaElement::constant(1);
}

OmegaTower omega_tower(const PrimeContext& ctx, int n) {
  require_level(n);
  OmegaTower t;
  t.n = n;
  t.omega = omega(ctx, n);
  t.omega_tilde_plus = LambdaElement::constant(1);
  t.omega_tilde_minus = LambdaElement::constant(1);
  for (int m = 1; m <= n; ++m) {
    if (m % 2 == 0) {
      t.omega_tilde_plus *= cyclotomic_phi(ctx, m);
    } else {
      t.omega_tilde_minus *= cyclotomic_phi(ctx, m);
    }
  }
  t.omega_plus = LambdaElement::x() * t.omega_tilde_plus;
  t.omega_minus = LambdaElement::x() * t.omega_tilde_minus;
  return t;
}

OmegaTildeDegrees omega_tilde_degrees(const PrimeContext& ctx, int n) {
  require_level(n);
  OmegaTildeDegrees d;
  for (int m = 1; m <= n; ++m) {
    const std::int64_t t = ctx.totient(m);
    std::int64_t& slot = (m % 2 == 0) ? d.plus : d.minus;
    if (slot > std::numeric_limits<std::int64_t>::max() - t) {
      throw Error(ErrorKind::InvalidInput, "degree overflows 63 bits");
    }
    slot += t;
  }
  return d;
}

IwasawaInvariants iwasawa_invariants(const PrimeContext& ctx, const LambdaElement& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "Iwasawa invariants of 0 are undefined");
  const mpz_class p = static_cast<long>(ctx.p());
  IwasawaInvariants inv{std::numeric_limits<long>::max(), 0};
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpz_class rest;
    const long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), c[i].get_mpz_t(), p.get_mpz_t()));
    if (v < inv.mu) {
      inv.mu = v;
      inv.lambda = static_cast<long>(i);
    }
  }
  return inv;
}

std::vector<mpz_class> reduce_mod_omega(const PrimeContext& ctx, const LambdaElement& f, int n) {
  require_level(n);
  const std::size_t size = static_cast<std::size_t>(ctx.pow(n));
  const LambdaElement r = f.degree() < static_cast<long>(size) ? f : f.rem(omega(ctx, n));
  const mpz_class mod = ctx.modulus();
  std::vector<mpz_class> out(size);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(), mod.get_mpz_t());
  }
  return out;
}

}  // namespace iwk
