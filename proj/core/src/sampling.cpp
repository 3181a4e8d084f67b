#include "iwk/sampling.hpp"

#include "iwk/error.hpp"
#include "iwk/lambda_ring.hpp"

namespace iwk {
namespace {

bool coprime_to_omega(const PrimeContext& ctx, const LambdaElement& det, int n) {
  if (det.is_zero()) return false;
  for (int m = 0; m <= n; ++m) {
    if (det.divisible_by(cyclotomic_phi(ctx, m))) return false;
  }
  return true;
}

constexpr int kMaxRejections = 10000;

}  // namespace

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

bool Sampler::coin(double probability) { return std::bernoulli_distribution(probability)(rng_); }

LambdaElement Sampler::poly(int max_degree, std::int64_t bound) {
  const auto deg = static_cast<std::size_t>(uniform(0, max_degree));
  std::vector<mpz_class> c(deg + 1);
  for (auto& x : c) x = static_cast<long>(uniform(-bound, bound));
  return LambdaElement(std::move(c));
}

LambdaElement Sampler::unit(const PrimeContext& ctx, int max_degree) {
  std::vector<mpz_class> c = poly(max_degree, 4).coeffs();
  if (c.empty()) c.resize(1);
  const long p = static_cast<long>(ctx.p());
  c[0] = static_cast<long>(uniform(1, p - 1) + p * uniform(-1, 1));
  return LambdaElement(std::move(c));
}

LambdaElement Sampler::distinguished(const PrimeContext& ctx, int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  const long p = static_cast<long>(ctx.p());
  for (int i = 0; i < degree; ++i) c[i] = p * static_cast<long>(uniform(-2, 2));
  // A unit constant part of p·(unit) keeps λ exactly `degree`.
  if (degree > 0 && c[0] == 0) c[0] = p;
  c[degree] = 1;
  return LambdaElement(std::move(c));
}

LambdaElement Sampler::squarefree_phi_product(const PrimeContext& ctx, int n) {
  LambdaElement acc = LambdaElement::constant(1);
  for (int m = 0; m <= n - 1; ++m) {
    if (coin()) acc *= cyclotomic_phi(ctx, m);
  }
  return acc;
}

LambdaMatrix Sampler::coprime_matrix(const PrimeContext& ctx, int n, int max_degree) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    LambdaMatrix b(poly(max_degree, 3), poly(max_degree, 3), poly(max_degree, 3), poly(max_degree, 3));
    if (coprime_to_omega(ctx, b.det(), n)) return b;
  }
  throw Error(ErrorKind::InvalidInput, "rejection sampling exhausted");
}

LambdaMatrix Sampler::unit_resultant_matrix(const PrimeContext& ctx, int max_degree) {
  const mpz_class p = static_cast<long>(ctx.p());
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    LambdaMatrix b(poly(max_degree, 3), poly(max_degree, 3), poly(max_degree, 3), poly(max_degree, 3));
    if (!mpz_divisible_p(b.det().coeff(0).get_mpz_t(), p.get_mpz_t())) return b;
  }
  throw Error(ErrorKind::InvalidInput, "rejection sampling exhausted");
}

LambdaMatrix Sampler::special_matrix(const PrimeContext& ctx, int n) {
  const LambdaMatrix b = coprime_matrix(ctx, n, 2);
  const LambdaMatrix d = LambdaMatrix::diag(squarefree_phi_product(ctx, n), squarefree_phi_product(ctx, n));
  return b * d;
}

LambdaElement Sampler::cyclic_relation(const PrimeContext& ctx, int n) {
  LambdaElement f = LambdaElement::constant(ctx.prime_power(static_cast<int>(uniform(0, 2))));
  for (int m = 0; m <= n + 1; ++m) {
    if (m != n && coin(1.0 / 3.0)) f *= cyclotomic_phi(ctx, m);
  }
  return f * unit(ctx, 2);
}

ColemanData Sampler::coleman(const PrimeContext& ctx) {
  const LambdaElement x = LambdaElement::x();
  // [[a, c], [1, d]] with c ≡ a·d mod φ: rank exactly 1 at the root of φ.
  auto rank_one_at = [&](const LambdaElement& phi) {
    const LambdaElement a = poly(3, 3) + LambdaElement::monomial(1, 3);
    const LambdaElement d = poly(3, 3) + LambdaElement::monomial(1, 3);
    return LambdaMatrix(a, (a * d).rem(phi), LambdaElement::constant(1), d);
  };
  auto mix = [&](const LambdaMatrix& m) {
    const LambdaMatrix shear(LambdaElement::constant(1), LambdaElement::constant(uniform(-1, 1)), {},
                             LambdaElement::constant(1));
    return coin() ? m * shear : m;
  };
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    LambdaMatrix minus(poly(6, 4), poly(6, 4), poly(6, 4), poly(6, 4));
    const std::int64_t pick = uniform(0, 3);
    if (pick == 1) {
      minus = rank_one_at(cyclotomic_phi(ctx, 1));
    } else if (pick == 2) {
      minus = rank_one_at(x);
    }
    LambdaMatrix plus_core(poly(5, 4), poly(5, 4), poly(5, 4), poly(5, 4));
    // Φ_2 fits the degree budget only at p = 3.
    if (ctx.p() == 3 && coin(0.4)) plus_core = rank_one_at(cyclotomic_phi(ctx, 2));
    const LambdaMatrix plus = x * mix(plus_core);
    minus = mix(minus);
    if (plus.det().is_zero() || minus.det().is_zero()) continue;
    return ColemanData(plus, minus);
  }
  throw Error(ErrorKind::InvalidInput, "rejection sampling exhausted");
}

}  // namespace iwk
