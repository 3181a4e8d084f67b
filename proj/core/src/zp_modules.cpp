#include "iwk/zp_modules.hpp"

#include <algorithm>
#include <numeric>

#include "iwk/error.hpp"

namespace iwk {
namespace {

// Valuation of x ∈ [0, p^N), with 0 reported as N.
int local_valuation(const mpz_class& x, unsigned long p, int n) {
  if (x == 0) return n;
  int v = 0;
  mpz_class t = x;
  while (v < n && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

// Dense working copy of a matrix over Z/p^N. Each pivot step moves a
// minimal-valuation entry to (k, k) and clears column k below it by row
// operations. With `track` set, the pivot row is also cleared by column
// operations, which are replayed on `q` (the accumulated column transform).
class LocalEliminator {
 public:
  LocalEliminator(const PrimeContext& ctx, const IntMatrix& g, bool track)
      : p_(static_cast<unsigned long>(ctx.p())),
        n_(ctx.precision()),
        mod_(ctx.modulus()),
        a_(g.reduced(mod_)),
        track_(track) {
    if (track_) {
      q_ = IntMatrix(a_.cols(), a_.cols());
      for (std::size_t i = 0; i < a_.cols(); ++i) q_(i, i) = 1;
    }
  }

  // Runs elimination; returns the pivot valuations in order of discovery
  // (nondecreasing, since column and row operations never lower valuations).
  std::vector<int> run() {
    std::vector<int> vals;
    const std::size_t r = a_.rows();
    const std::size_t c = a_.cols();
    for (std::size_t k = 0; k < std::min(r, c); ++k) {
      int best = n_;
      std::size_t bi = 0;
      std::size_t bj = 0;
      for (std::size_t i = k; i < r && best > 0; ++i) {
        for (std::size_t j = k; j < c; ++j) {
          const mpz_class& x = a_(i, j);
          if (x == 0) continue;
          const int v = local_valuation(x, p_, best);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
      }
      if (best == n_) break;
      swap_rows(k, bi);
      swap_cols(k, bj);
      pivot(k, best);
      vals.push_back(best);
    }
    return vals;
  }

  const IntMatrix& transform() const { return q_; }

 private:
  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(x, j), a_(y, j));
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, x), a_(i, y));
    if (track_) {
      for (std::size_t i = 0; i < q_.rows(); ++i) std::swap(q_(i, x), q_(i, y));
    }
  }

  void pivot(std::size_t k, int v) {
    // a(k,k) = p^v·u with u a unit.
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p_, static_cast<unsigned long>(v));
    mpz_class u;
    mpz_divexact(u.get_mpz_t(), a_(k, k).get_mpz_t(), pv.get_mpz_t());
    mpz_class uinv;
    mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), mod_.get_mpz_t());

    mpz_class f;
    for (std::size_t i = k + 1; i < a_.rows(); ++i) {
      if (a_(i, k) == 0) continue;
      mpz_divexact(f.get_mpz_t(), a_(i, k).get_mpz_t(), pv.get_mpz_t());
      f *= uinv;
      mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), mod_.get_mpz_t());
      for (std::size_t j = k; j < a_.cols(); ++j) {
        if (a_(k, j) == 0) continue;
        mpz_submul(a_(i, j).get_mpz_t(), f.get_mpz_t(), a_(k, j).get_mpz_t());
        mpz_fdiv_r(a_(i, j).get_mpz_t(), a_(i, j).get_mpz_t(), mod_.get_mpz_t());
      }
    }
    if (!track_) return;
    for (std::size_t j = k + 1; j < a_.cols(); ++j) {
      if (a_(k, j) == 0) continue;
      mpz_divexact(f.get_mpz_t(), a_(k, j).get_mpz_t(), pv.get_mpz_t());
      f *= uinv;
      mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), mod_.get_mpz_t());
      a_(k, j) = 0;
      for (std::size_t i = 0; i < q_.rows(); ++i) {
        if (q_(i, k) == 0) continue;
        mpz_submul(q_(i, j).get_mpz_t(), f.get_mpz_t(), q_(i, k).get_mpz_t());
        mpz_fdiv_r(q_(i, j).get_mpz_t(), q_(i, j).get_mpz_t(), mod_.get_mpz_t());
      }
    }
  }

  unsigned long p_;
  int n_;
  mpz_class mod_;
  IntMatrix a_;
  bool track_;
  IntMatrix q_;
};

}  // namespace

std::vector<int> snf_local(const PrimeContext& ctx, const IntMatrix& g) {
  LocalEliminator elim(ctx, g, false);
  std::vector<int> vals = elim.run();
  vals.resize(std::min(g.rows(), g.cols()), ctx.precision());
  return vals;
}

SpanPresentation::SpanPresentation(std::size_t ambient, IntMatrix gens)
    : ambient_rank(ambient), generators(std::move(gens)) {
  if (generators.cols() == 0) {
    generators = IntMatrix(ambient, 0);
  } else if (generators.rows() != ambient) {
    throw Error(ErrorKind::InvalidInput, "generator length does not match the ambient rank");
  }
}

SpanPresentation SpanPresentation::joined(const SpanPresentation& other) const {
  if (other.ambient_rank != ambient_rank) throw Error(ErrorKind::InvalidInput, "spans live in different ambients");
  return SpanPresentation(ambient_rank, generators.hstack(other.generators));
}

std::int64_t SpanReading::length() const {
  std::int64_t total = 0;
  for (int a : finite_valuations) total += precision - a;
  return total;
}

std::int64_t SpanReading::valuation_sum() const {
  return std::accumulate(finite_valuations.begin(), finite_valuations.end(), std::int64_t{0});
}

SpanReading read_span(const PrimeContext& ctx, const SpanPresentation& s) {
  SpanReading r;
  r.precision = ctx.precision();
  for (int a : snf_local(ctx, s.generators)) {
    if (a < r.precision) r.finite_valuations.push_back(a);
  }
  return r;
}

bool readings_agree(const SpanReading& coarse, const SpanReading& fine, std::optional<std::size_t> exact_rank) {
  if (coarse.finite_valuations != fine.finite_valuations) return false;
  return !exact_rank || *exact_rank == coarse.visible_rank();
}

LengthReport span_length(const PrimeContext& ctx, const SpanPresentation& s) {
  const SpanReading coarse = read_span(ctx, s);
  const SpanReading fine = read_span(ctx.refined(), s);
  return LengthReport{coarse.length(), readings_agree(coarse, fine)};
}

QuotientInvariants quotient_invariants(const PrimeContext& ctx, const SpanPresentation& relations) {
  const std::size_t rank = relations.generators.rank();
  const SpanReading coarse = read_span(ctx, relations);
  const SpanReading fine = read_span(ctx.refined(), relations);
  if (!readings_agree(coarse, fine, rank)) {
    throw Error(ErrorKind::PrecisionUnstable,
                "torsion reading changes between N=" + std::to_string(ctx.precision()) + " and N+D=" +
                    std::to_string(ctx.refined().precision()));
  }
  QuotientInvariants q;
  q.free_rank = static_cast<std::int64_t>(relations.ambient_rank - rank);
  q.torsion_length = LengthReport{coarse.valuation_sum(), true};
  return q;
}

LengthReport nested_span_quotient_length(const PrimeContext& ctx, const SpanPresentation& v,
                                         const SpanPresentation& u) {
  if (v.ambient_rank != u.ambient_rank) throw Error(ErrorKind::InvalidInput, "spans live in different ambients");
  const SpanReading v_coarse = read_span(ctx, v);
  const SpanReading u_coarse = read_span(ctx, u);
  if (read_span(ctx, v.joined(u)).length() != v_coarse.length()) {
    throw Error(ErrorKind::NotNested, "span U is not contained in span V");
  }
  const std::size_t v_rank = v.generators.rank();
  const std::size_t u_rank = u.generators.rank();
  if (v_rank != u_rank) {
    throw Error(ErrorKind::UndefinedRank, "V/U is infinite (ranks " + std::to_string(v_rank) + " and " +
                                              std::to_string(u_rank) + ")");
  }
  const PrimeContext fine_ctx = ctx.refined();
  const bool stable = readings_agree(v_coarse, read_span(fine_ctx, v), v_rank) &&
                      readings_agree(u_coarse, read_span(fine_ctx, u), u_rank);
  return LengthReport{v_coarse.length() - u_coarse.length(), stable};
}

IntMatrix kernel_generators(const PrimeContext& ctx, const IntMatrix& h) {
  const std::size_t cols = h.cols();
  IntMatrix out(cols, 0);
  if (cols == 0) return out;
  LocalEliminator elim(ctx, h, true);
  const std::vector<int> vals = elim.run();
  const IntMatrix& q = elim.transform();
  const mpz_class mod = ctx.modulus();
  // H·Q is diagonal with entries p^{h_k}; the kernel of the diagonal form is
  // generated by p^{N−h_k} e_k and by e_k past the pivots.
  for (std::size_t k = 0; k < cols; ++k) {
    mpz_class scale = 1;
    if (k < vals.size()) {
      if (vals[k] == 0) continue;
      scale = ctx.prime_power(ctx.precision() - vals[k]);
    }
    std::vector<mpz_class> col(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      col[i] = q(i, k) * scale;
      mpz_fdiv_r(col[i].get_mpz_t(), col[i].get_mpz_t(), mod.get_mpz_t());
    }
    out.append_column(col);
  }
  return out;
}

}  // namespace iwk
