#include "iwk/growth_model.hpp"

#include <sstream>

#include "iwk/error.hpp"
#include "iwk/lambda_ring.hpp"

namespace iwk {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InvalidInput, "growth value overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidInput, "growth value overflows 64 bits");
  return r;
}

// Largest p^n for which degree_identities also expands the polynomials.
constexpr std::int64_t kExpansionLimit = 243;

}  // namespace

std::int64_t s_sequence(std::int64_t p, int n) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be an odd prime");
  if (n < 0) throw Error(ErrorKind::InvalidInput, "level must be non-negative");
  std::int64_t s = 0;
  std::int64_t pk = 1;
  for (int k = 1; k <= n; ++k) {
    pk = checked_mul(pk, p);
    s = checked_add(pk, -s);
  }
  return s;
}

void InvariantSet::validate() const {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be an odd prime");
  if (lambda_plus < 0 || lambda_minus < 0 || mu_plus < 0 || mu_minus < 0 || r_inf < 0) {
    throw Error(ErrorKind::InvalidInput, "Iwasawa invariants and r_inf must be non-negative");
  }
}

std::int64_t nabla_x_formula(const InvariantSet& inv, int n) {
  inv.validate();
  if (n < 1) throw Error(ErrorKind::InvalidInput, "level n must be at least 1");
  const PrimeContext ctx(inv.p);
  const bool odd = n % 2 == 1;
  const std::int64_t lambda = odd ? inv.lambda_minus : inv.lambda_plus;
  const std::int64_t mu = odd ? inv.mu_minus : inv.mu_plus;
  return checked_add(checked_add(checked_mul(2, s_sequence(inv.p, n - 1)), lambda), checked_mul(ctx.totient(n), mu));
}

GrowthTable sha_growth(const InvariantSet& inv, int n0, std::int64_t e0, int n_last) {
  inv.validate();
  if (n0 < 0) throw Error(ErrorKind::InvalidInput, "baseline level must be non-negative");
  if (n_last < n0) throw Error(ErrorKind::InvalidInput, "range must end at or after the baseline level");
  GrowthTable t;
  t.n0 = n0;
  t.e0 = e0;
  std::int64_t e = e0;
  for (int n = n0 + 1; n <= n_last; ++n) {
    GrowthRow row;
    row.n = n;
    row.odd = n % 2 == 1;
    row.s_prev = s_sequence(inv.p, n - 1);
    row.delta_e = checked_add(nabla_x_formula(inv, n), -inv.r_inf);
    e = checked_add(e, row.delta_e);
    row.e_n = e;
    t.rows.push_back(row);
  }
  return t;
}

DegreeIdentities degree_identities(const PrimeContext& ctx, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "level n must be at least 1");
  const OmegaTildeDegrees deg = omega_tilde_degrees(ctx, n);
  DegreeIdentities d;
  d.n = n;
  d.deg_tilde_plus = deg.plus;
  d.deg_tilde_minus = deg.minus;
  d.s_prev = s_sequence(ctx.p(), n - 1);
  const bool odd = n % 2 == 1;
  d.odd_ok = !odd || d.deg_tilde_plus == d.s_prev;
  d.even_ok = odd || d.deg_tilde_minus == d.s_prev - 1;
  if (ctx.pow(n) <= kExpansionLimit) {
    const OmegaTower t = omega_tower(ctx, n);
    const bool match = t.omega_tilde_plus.degree() == d.deg_tilde_plus &&
                       t.omega_tilde_minus.degree() == d.deg_tilde_minus;
    d.odd_ok = d.odd_ok && match;
    d.even_ok = d.even_ok && match;
    d.expanded = true;
  }
  return d;
}

std::string growth_csv(const GrowthTable& table) {
  std::ostringstream os;
  os << "n,parity,s_prev,delta_e,e_n\n";
  for (const auto& r : table.rows) {
    os << r.n << ',' << (r.odd ? "odd" : "even") << ',' << r.s_prev << ',' << r.delta_e << ',' << r.e_n << '\n';
  }
  return os.str();
}

}  // namespace iwk
