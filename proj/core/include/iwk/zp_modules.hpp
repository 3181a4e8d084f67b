#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "iwk/context.hpp"
#include "iwk/int_matrix.hpp"

namespace iwk {

/// Smith normal form of G over the chain ring Z/p^N: the nondecreasing
/// diagonal valuations, min(rows, cols) of them, with N standing for a zero
/// diagonal entry.
std::vector<int> snf_local(const PrimeContext& ctx, const IntMatrix& g);

/// Submodule of the free module of rank `ambient_rank` spanned by the columns
/// of `generators`. Generators are kept as exact integers so that ranks over
/// Q stay available; reduction mod p^N happens per query.
struct SpanPresentation {
  std::size_t ambient_rank = 0;
  IntMatrix generators;

  SpanPresentation() = default;
  SpanPresentation(std::size_t ambient, IntMatrix gens);

  /// Union of generator sets over the same ambient module.
  SpanPresentation joined(const SpanPresentation& other) const;
};

struct LengthReport {
  std::int64_t length = 0;
  bool stable = false;
};

/// Finite SNF valuations of a span at one precision.
struct SpanReading {
  int precision = 0;
  std::vector<int> finite_valuations;  // the a_i < precision, sorted

  /// Length of the image in (Z/p^precision)^ambient: Σ (precision − a_i).
  std::int64_t length() const;
  /// Σ a_i; the torsion length of ambient / span when the span has full
  /// visible rank.
  std::int64_t valuation_sum() const;
  std::size_t visible_rank() const { return finite_valuations.size(); }
};

SpanReading read_span(const PrimeContext& ctx, const SpanPresentation& s);

/// True when the reading at N matches the reading at N + Δ and, if an exact
/// rank is supplied, all of the lattice's elementary divisors are visible.
bool readings_agree(const SpanReading& coarse, const SpanReading& fine,
                    std::optional<std::size_t> exact_rank = std::nullopt);

/// Z_p-length of the image of the span in (Z/p^N)^ambient.
LengthReport span_length(const PrimeContext& ctx, const SpanPresentation& s);

struct QuotientInvariants {
  std::int64_t free_rank = 0;
  LengthReport torsion_length;
};

/// Free rank (exact, over Q) and torsion length of ambient / span.
/// Throws PrecisionUnstable if the torsion reading is not certified.
QuotientInvariants quotient_invariants(const PrimeContext& ctx, const SpanPresentation& relations);

/// length(span V / span U). Throws NotNested unless U ⊆ V, and UndefinedRank
/// when the quotient is infinite.
LengthReport nested_span_quotient_length(const PrimeContext& ctx, const SpanPresentation& v,
                                         const SpanPresentation& u);

/// Columns generating { x : H x ≡ 0 mod p^N } over Z/p^N.
IntMatrix kernel_generators(const PrimeContext& ctx, const IntMatrix& h);

}  // namespace iwk
