#include <gtest/gtest.h>

#include "iwk/cyclo_eval.hpp"
#include "iwk/error.hpp"
#include "iwk/lambda_ring.hpp"
#include "oracles.hpp"

using namespace iwk;

namespace {
const PrimeContext kP3(3);
const LambdaElement kX = LambdaElement::x();
}  // namespace

TEST(OrdEps, Examples) {
  EXPECT_EQ(ord_eps(kP3, 1, kX), ExtendedValuation(1));
  EXPECT_EQ(ord_eps(kP3, 1, LambdaElement{3}), ExtendedValuation(2));
  EXPECT_EQ(ord_eps(kP3, 1, cyclotomic_phi(kP3, 2)), ExtendedValuation(2));
  EXPECT_EQ(ord_eps(kP3, 0, LambdaElement{18, 1}), ExtendedValuation(2));
  EXPECT_TRUE(ord_eps(kP3, 0, kX).is_infinite());
  EXPECT_TRUE(ord_eps(kP3, 2, cyclotomic_phi(kP3, 2) * LambdaElement{1, 5}).is_infinite());
  EXPECT_EQ(ExtendedValuation::infinity().to_string(), "inf");
  EXPECT_EQ(ExtendedValuation(4).to_string(), "4");
}

TEST(OrdEps, AgreesWithSylvesterOracle) {
  const std::vector<LambdaElement> samples{
      {1, 1}, {3, 0, 1}, {2, -5, 7, 1}, {9, 3, -3, 0, 2}, {0, 0, 6}, {27}, {4, 4, 4, 4, 4, 4, 4, 1}};
  for (long p : {3L, 5L}) {
    const PrimeContext ctx(p);
    for (int m = 0; m <= 2; ++m) {
      for (const auto& f : samples) {
        const auto expected = oracle::ord_eps(p, m, f);
        const ExtendedValuation got = ord_eps(ctx, m, f);
        ASSERT_EQ(got.is_finite(), expected.has_value()) << f << " m=" << m;
        if (expected) {
          EXPECT_EQ(got.value(), *expected) << f << " m=" << m << " p=" << p;
        }
      }
    }
  }
}

TEST(DetOrdAtEps, Examples) {
  EXPECT_EQ(det_ord_at_eps(kP3, 1, LambdaMatrix::diag(kX, kX)), ExtendedValuation(2));
  EXPECT_EQ(det_ord_at_eps(kP3, 1, LambdaMatrix::identity()), ExtendedValuation(0));
  EXPECT_TRUE(det_ord_at_eps(kP3, 1, LambdaMatrix::diag(cyclotomic_phi(kP3, 1), LambdaElement{1})).is_infinite());
}

TEST(MatrixRankAtEps, Examples) {
  EXPECT_EQ(matrix_rank_at_eps(kP3, 0, LambdaMatrix::diag(kX, kX)), 0);
  EXPECT_EQ(matrix_rank_at_eps(kP3, 0, LambdaMatrix::diag(kX, LambdaElement{1})), 1);
  const LambdaElement phi = cyclotomic_phi(kP3, 1);
  EXPECT_EQ(matrix_rank_at_eps(kP3, 1, LambdaMatrix(phi, {}, LambdaElement{1}, phi)), 1);
  EXPECT_EQ(matrix_rank_at_eps(kP3, 1, LambdaMatrix::identity()), 2);
}

TEST(CrtInterpolate, Examples) {
  EXPECT_EQ(crt_interpolate(kP3, {{0, RationalPoly(LambdaElement{5})}}), RationalPoly(LambdaElement{5}));
  EXPECT_TRUE(crt_interpolate(kP3, {{0, RationalPoly()}, {1, RationalPoly()}}).is_zero());
  const RationalPoly f = crt_interpolate(kP3, {{0, RationalPoly(LambdaElement{1})}, {1, RationalPoly()}});
  EXPECT_EQ(f, RationalPoly(LambdaElement{3, 3, 1}, 3));
  EXPECT_EQ(f.to_string(), "(X^2 + 3X + 3)/3");
  EXPECT_TRUE(crt_interpolate(kP3, {}).is_zero());
}

TEST(CrtInterpolate, SatisfiesEveryCongruence) {
  const std::vector<CrtPoint> pts{{0, RationalPoly(LambdaElement{2})},
                                  {1, RationalPoly(LambdaElement{1, 1})},
                                  {2, RationalPoly(LambdaElement{0, 0, 0, 4}, 5)}};
  const RationalPoly f = crt_interpolate(kP3, pts);
  EXPECT_LT(f.numerator().degree(), 1 + 2 + 6);
  for (const auto& pt : pts) {
    const QPoly phi(cyclotomic_phi(kP3, pt.level));
    EXPECT_TRUE((f.to_qpoly() - pt.value.to_qpoly()).rem(phi).is_zero()) << "level " << pt.level;
  }
}

TEST(CrtInterpolate, RejectsDuplicateLevels) {
  try {
    crt_interpolate(kP3, {{1, RationalPoly()}, {1, RationalPoly(LambdaElement{1})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateLevel);
  }
}

TEST(RationalPoly, NormalizesContent) {
  const RationalPoly r(LambdaElement{6, 9}, -3);
  EXPECT_EQ(r.numerator(), (LambdaElement{-2, -3}));
  EXPECT_EQ(r.denominator(), 1);
  EXPECT_TRUE(r.is_integral());
  EXPECT_EQ(common_denominator({RationalPoly(LambdaElement{1}, 9), RationalPoly(LambdaElement{1}, 6)}), 18);
  EXPECT_THROW(RationalPoly(LambdaElement{1}, 0), Error);
}

TEST(InverseMod, InvertsModuloPhi) {
  const QPoly phi(cyclotomic_phi(kP3, 1));
  const QPoly x(kX);
  const QPoly inv = inverse_mod(x, phi);
  const QPoly one = (x * inv).rem(phi);
  EXPECT_EQ(one, QPoly(LambdaElement{1}));
  EXPECT_THROW(inverse_mod(phi, phi), Error);
}
