#include "tower_spans.hpp"

#include "iwk/lambda_ring.hpp"

namespace iwk::detail {

std::vector<std::vector<mpz_class>> shifted_residues(const LambdaElement& f, const LambdaElement& w,
                                                     std::size_t count) {
  const auto size = static_cast<std::size_t>(w.degree());
  std::vector<mpz_class> cur(size);
  const LambdaElement r = f.rem(w);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) cur[i] = r.coeffs()[i];
  std::vector<std::vector<mpz_class>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur);
    // Multiply by X and fold the overflow back using the monic w.
    mpz_class top = cur[size - 1];
    for (std::size_t k = size - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t k = 0; k < size; ++k) mpz_submul(cur[k].get_mpz_t(), top.get_mpz_t(), w.coeffs()[k].get_mpz_t());
    }
  }
  return out;
}

IntMatrix relation_span(const PrimeContext& ctx, const LambdaPresentation& rel, int level, std::size_t count) {
  const auto size = static_cast<std::size_t>(ctx.pow(level));
  const std::size_t k = rel.ambient;
  IntMatrix g(k * size, rel.columns.size() * count);
  const LambdaElement w = omega(ctx, level);
  for (std::size_t j = 0; j < rel.columns.size(); ++j) {
    for (std::size_t t = 0; t < k; ++t) {
      const auto residues = shifted_residues(rel.columns[j][t], w, count);
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t c = 0; c < size; ++c) g(t * size + c, j * count + i) = residues[i][c];
      }
    }
  }
  return g;
}

}  // namespace iwk::detail
