#include <gtest/gtest.h>

#include "iwk/error.hpp"
#include "iwk/growth_model.hpp"

using namespace iwk;

TEST(SSequence, Examples) {
  EXPECT_EQ(s_sequence(3, 0), 0);
  EXPECT_EQ(s_sequence(3, 1), 3);
  EXPECT_EQ(s_sequence(3, 3), 21);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(s_sequence(5, n) + s_sequence(5, n - 1), PrimeContext(5).pow(n));
}

TEST(ShaGrowth, Examples) {
  InvariantSet zero;
  const GrowthTable t = sha_growth(zero, 0, 0, 4);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.rows[0].delta_e, 0);
  EXPECT_EQ(t.rows[1].delta_e, 6);
  EXPECT_EQ(t.rows[2].delta_e, 12);
  EXPECT_EQ(t.rows[3].delta_e, 42);
  EXPECT_EQ(t.rows[3].e_n, 60);
  EXPECT_TRUE(t.rows[0].odd);

  InvariantSet inv;
  inv.lambda_minus = 1;
  inv.r_inf = 2;
  EXPECT_EQ(sha_growth(inv, 2, 5, 3).rows.at(0).delta_e, 11);
}

TEST(ShaGrowth, Validation) {
  InvariantSet bad;
  bad.p = 4;
  EXPECT_THROW(sha_growth(bad, 0, 0, 2), Error);
  InvariantSet neg;
  neg.mu_plus = -1;
  EXPECT_THROW(neg.validate(), Error);
  EXPECT_THROW(sha_growth(InvariantSet{}, 3, 0, 2), Error);
}

TEST(NablaXFormula, Examples) {
  EXPECT_EQ(nabla_x_formula(InvariantSet{}, 2), 6);
  InvariantSet inv;
  inv.lambda_minus = 2;
  EXPECT_EQ(nabla_x_formula(inv, 1), 2);
  inv.mu_plus = 1;
  EXPECT_EQ(nabla_x_formula(inv, 2), 6 + 6);
}

TEST(DegreeIdentities, Examples) {
  const PrimeContext ctx(3);
  EXPECT_EQ(degree_identities(ctx, 1).deg_tilde_plus, 0);
  const DegreeIdentities d3 = degree_identities(ctx, 3);
  EXPECT_EQ(d3.deg_tilde_plus, 6);
  EXPECT_EQ(d3.s_prev, 6);
  EXPECT_TRUE(d3.odd_ok);
  const DegreeIdentities d2 = degree_identities(ctx, 2);
  EXPECT_EQ(d2.deg_tilde_minus, 2);
  EXPECT_TRUE(d2.even_ok);
  EXPECT_TRUE(d2.expanded);
}

TEST(GrowthCsv, Format) {
  const std::string csv = growth_csv(sha_growth(InvariantSet{}, 0, 0, 2));
  EXPECT_EQ(csv, "n,parity,s_prev,delta_e,e_n\n1,odd,0,0,0\n2,even,3,6,6\n");
}
