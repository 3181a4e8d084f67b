#include <gtest/gtest.h>

#include "iwk/cyclo_eval.hpp"
#include "iwk/error.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_ring.hpp"
#include "oracles.hpp"

using namespace iwk;

namespace {

const PrimeContext kP3(3);
const LambdaElement kX = LambdaElement::x();

ErrorKind error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(NablaCyclic, Examples) {
  const NablaResult a = nabla_cyclic(kP3, kX, 1);
  EXPECT_EQ(a.nabla, 1);
  EXPECT_EQ(a.closed_form, 1);
  EXPECT_EQ(a.agrees, true);
  const NablaResult b = nabla_cyclic(kP3, LambdaElement{3}, 1);
  EXPECT_EQ(b.nabla, 2);
  EXPECT_EQ(b.ker_length, 2);
  EXPECT_EQ(b.coker_length, 0);
  EXPECT_EQ(error_of([] { nabla_cyclic(kP3, cyclotomic_phi(kP3, 1), 1); }), ErrorKind::PhiDivides);
  EXPECT_EQ(error_of([] { nabla_cyclic(kP3, LambdaElement{}, 1); }), ErrorKind::ZeroElement);
  EXPECT_EQ(error_of([] { nabla_cyclic(kP3, kX, 0); }), ErrorKind::InvalidInput);
}

TEST(NablaTorsion, Examples) {
  const NablaResult a = nabla_torsion_tower(kP3, LambdaPresentation::cyclic(LambdaElement{3}), 1);
  EXPECT_EQ(a.nabla, 2);
  EXPECT_EQ(a.closed_form, 2);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(nabla_torsion_tower(kP3, LambdaPresentation::cyclic(kX), n).nabla, 1) << n;
  }
  const NablaResult c = nabla_torsion_tower(kP3, LambdaPresentation::cyclic(LambdaElement{0, 3}), 2);
  EXPECT_EQ(c.nabla, 7);
  EXPECT_EQ(c.closed_form, 7);
  EXPECT_EQ(c.agrees, true);
}

TEST(NablaTorsion, RejectsNonTorsion) {
  LambdaPresentation one_column;
  one_column.ambient = 2;
  one_column.columns = {{kX, LambdaElement{1}}};
  EXPECT_EQ(error_of([&] { nabla_torsion_tower(kP3, one_column, 1); }), ErrorKind::NotTorsion);
}

TEST(NablaTorsion, SweepFindsStabilization) {
  const TorsionSweep s = torsion_tower_sweep(kP3, LambdaPresentation::cyclic(LambdaElement{0, 3}), 3);
  ASSERT_EQ(s.levels.size(), 3u);
  ASSERT_TRUE(s.stabilization_level.has_value());
  EXPECT_LE(*s.stabilization_level, 2);
  EXPECT_EQ(cyclic_stabilization_level(kP3, LambdaElement{0, 3}), 1);
  EXPECT_EQ(cyclic_stabilization_level(kP3, LambdaElement{0, 0, 0, 1}), 2);
}

TEST(NablaMatrix, Examples) {
  const NablaResult a = nabla_matrix_tower(kP3, LambdaMatrix::diag(kX, kX), 1);
  EXPECT_EQ(a.nabla, 2);
  EXPECT_EQ(a.closed_form, 2);
  EXPECT_EQ(a.agrees, true);
  EXPECT_EQ(nabla_matrix_tower(kP3, LambdaMatrix::identity(), 1).nabla, 0);
  const LambdaElement phi1 = cyclotomic_phi(kP3, 1);
  const NablaResult c = nabla_matrix_tower(kP3, LambdaMatrix::diag(phi1, phi1), 2);
  EXPECT_EQ(c.nabla, 4);
  EXPECT_EQ(c.coker_length, 0);
  EXPECT_EQ(error_of([] { nabla_matrix_tower(kP3, LambdaMatrix::diag(kX, LambdaElement{}), 1); }),
            ErrorKind::SingularMatrix);
  EXPECT_EQ(error_of([&] { nabla_matrix_tower(kP3, LambdaMatrix::diag(phi1, LambdaElement{1}), 1); }),
            ErrorKind::UndefinedRank);
}

TEST(NablaMatrix, NonSpecialHasNoClosedForm) {
  // det = X², no column divisible by X.
  const LambdaMatrix a(LambdaElement{1}, LambdaElement{1}, kX, LambdaElement{0, 1, 1});
  const NablaResult r = nabla_matrix_tower(kP3, a, 1);
  EXPECT_FALSE(r.closed_form.has_value());
  EXPECT_FALSE(r.agrees.has_value());
}

TEST(NablaColeman, Examples) {
  const ColemanData a(LambdaMatrix::scalar(kX), LambdaMatrix::identity());
  const NablaResult ra = nabla_coleman_tower(kP3, a, 1);
  EXPECT_EQ(ra.nabla, 0);
  EXPECT_EQ(ra.closed_form, 0);
  const ColemanData b(LambdaMatrix::scalar(kX), LambdaMatrix::diag(LambdaElement{1}, cyclotomic_phi(kP3, 1)));
  EXPECT_EQ(coleman_closed_form(kP3, b, 2), 6);
  const NablaResult rb = nabla_coleman_tower(kP3, b, 2);
  EXPECT_EQ(rb.nabla, 6);
  EXPECT_EQ(rb.agrees, true);
}

TEST(Additivity, Examples) {
  const AdditivityReport r = additivity_check(kP3, CyclicTower{kX}, CyclicTower{LambdaElement{3}}, 1);
  EXPECT_EQ(r.sum.nabla, 3);
  EXPECT_TRUE(r.holds);
  // Λ/(1) is the zero system.
  const AdditivityReport z = additivity_check(kP3, CyclicTower{LambdaElement{1}}, CyclicTower{LambdaElement{9}}, 2);
  EXPECT_EQ(z.left.nabla, 0);
  EXPECT_EQ(z.sum.nabla, z.right.nabla);
  EXPECT_TRUE(z.holds);
}

TEST(Additivity, ConstantFiniteSystem) {
  LambdaPresentation m;
  m.ambient = 1;
  m.columns = {{LambdaElement{3}}, {kX}};
  for (int n = 1; n <= 3; ++n) {
    const NablaResult r = nabla_brute_force(kP3, m, n);
    EXPECT_EQ(r.nabla, 0) << n;
    EXPECT_EQ(r.ker_length, 0) << n;
  }
}

TEST(NablaBruteForce, MatchesLatticeOracle) {
  const std::vector<LambdaPresentation> cases{
      LambdaPresentation::cyclic(LambdaElement{3, 1}), LambdaPresentation::cyclic(LambdaElement{9, 0, 1}),
      LambdaPresentation::from_matrix(LambdaMatrix(kX, LambdaElement{1}, LambdaElement{3}, LambdaElement{2, 1})),
      LambdaPresentation::from_matrix(LambdaMatrix::diag(LambdaElement{3}, LambdaElement{0, 1}))};
  for (const auto& rel : cases) {
    for (int n = 1; n <= 2; ++n) {
      const auto expected = oracle::nabla(3, rel, n);
      ASSERT_TRUE(expected.has_value());
      const NablaResult got = nabla_brute_force(kP3, rel, n);
      EXPECT_EQ(got.ker_length, expected->ker_length);
      EXPECT_EQ(got.lower_rank, expected->lower_rank);
      EXPECT_EQ(got.nabla, expected->nabla);
    }
  }
}

TEST(LambdaPresentation, Determinant) {
  const LambdaPresentation p = LambdaPresentation::from_matrix(LambdaMatrix::diag(kX, LambdaElement{3}));
  EXPECT_EQ(p.determinant(), LambdaElement({0, 3}));
  EXPECT_EQ(p.generic_rank(), 2u);
  const LambdaPresentation s = p.direct_sum(LambdaPresentation::cyclic(LambdaElement{2, 1}));
  EXPECT_EQ(s.ambient, 3u);
  EXPECT_EQ(s.determinant(), LambdaElement({0, 3}) * LambdaElement({2, 1}));
}

TEST(ValidateTower, Invariants) {
  EXPECT_EQ(error_of([] { validate_tower(CyclicTower{LambdaElement{}}); }), ErrorKind::ZeroElement);
  EXPECT_EQ(error_of([] { validate_tower(MatrixTower{LambdaMatrix::diag(kX, LambdaElement{})}); }),
            ErrorKind::SingularMatrix);
  EXPECT_NO_THROW(validate_tower(TorsionTower{LambdaPresentation::cyclic(kX)}));
}
