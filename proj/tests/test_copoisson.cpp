#include <copoisson/copoisson.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace copoisson;

namespace {
const ParityFunction& bump() {
  static const auto b = parse_function("bump:1,2");
  return b;
}
}  // namespace

TEST(IntegralIdentity, ZeroFunction) {
  const auto g = builtin_function("gaussian");
  const auto r = integral_identity(builtin_function("zero"), g, g);
  EXPECT_EQ(r.defect, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(IntegralIdentity, GaussianPair) {
  const auto g = builtin_function("gaussian");
  EXPECT_TRUE(integral_identity(bump(), g, g).pass);
}

TEST(IntegralIdentity, FejerPair) {
  const auto r = integral_identity(bump(), parse_function("tent:1"), parse_function("fejer:1"), 1e-6);
  EXPECT_TRUE(r.pass) << r.defect;
}

TEST(IntegralIdentity, RejectsNonPair) {
  EXPECT_THROW(integral_identity(bump(), builtin_function("gaussian"), parse_function("fejer:1")),
               std::invalid_argument);
}

TEST(ImproperF, BumpAndIndicator) {
  const auto r = improper_F_integral(bump());
  EXPECT_TRUE(r.pass) << r.defect;
  const auto q = improper_F_integral(parse_function("indicator:1,2"), {50, 100, 200}, 1e-3);
  EXPECT_TRUE(q.pass) << q.defect;
}

TEST(TruncatedTransform, LadderDecreases) {
  for (double xi : {0.0, 1.3}) {
    const auto rs = truncated_transform_ladder(bump(), xi, {50, 100, 200}, xi == 0 ? 1.0 : 2.0);
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_TRUE(rs.back().pass) << xi;
    EXPECT_LE(rs.back().defect, 1e-3);
  }
}

TEST(TwoKernel, Bump) {
  const auto r = two_kernel_identity(bump(), 0.7, 20);
  EXPECT_TRUE(r.pass) << r.defect;
}

TEST(Dirichlet, ContinuityPointAndZero) {
  EXPECT_NEAR(dirichlet_point_value(bump(), 1.5, 0.2).value, eval_K(bump(), 1.5), 1e-6);
  EXPECT_NEAR(dirichlet_point_value(bump(), 0.0, 0.2).value, eval_K(bump(), 0.0), 1e-6);
}

TEST(Dirichlet, JumpGivesMean) {
  const auto ind = parse_function("indicator:1,2");
  // sum_n ind(t/n)/n jumps at t = 2 (n = 1 term leaves, n = 2 enters with weight 1/2).
  const double h = 1e-9;
  const double mean = 0.5 * (eval_K(ind, 2 - h) + eval_K(ind, 2 + h));
  EXPECT_NEAR(dirichlet_point_value(ind, 2.0, 0.2).value, mean, 1e-6);
}

TEST(Pointwise, BumpAtLambda200) {
  for (const auto& r : pointwise_copoisson(bump(), {0.0, 0.3, 0.9, 1.7}, 200)) EXPECT_TRUE(r.pass) << r.params;
}

TEST(Pointwise, ZeroFunction) {
  for (const auto& r : pointwise_copoisson(builtin_function("zero"), {0.3}, 50, 1e-3, false))
    EXPECT_EQ(r.defect, 0.0);
}

TEST(PoissonAs, Gaussian) {
  const auto g = builtin_function("gaussian");
  for (const auto& r : poisson_as_check(g, g, {1.0, std::sqrt(2.0)})) EXPECT_TRUE(r.pass) << r.defect;
}

TEST(Duffin, OddBump) {
  for (const auto& r : duffin_pair(parse_function("odd_bump:1,2"), {0.4, 0.7, 1.3})) EXPECT_TRUE(r.pass) << r.defect;
  EXPECT_THROW(duffin_pair(bump(), {0.4}), std::invalid_argument);
}

TEST(Kahane, QuarterPair) {
  const auto cb = parse_function("cbump:0.25");
  std::vector<double> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(-0.24 + 0.048 * i);
  const auto rs = kahane_pair(cb, cb, xs, {0.1, 0.3, 0.7, 1.2, 2.5});
  ASSERT_EQ(rs.size(), 7u);
  EXPECT_EQ(rs[0].lhs, cplx(0.0));
  EXPECT_EQ(rs[1].lhs, cplx(0.0));
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.kind << ' ' << r.defect;
  EXPECT_THROW(kahane_pair(cb, cb, {0.3}, {0.1}), std::invalid_argument);
}

TEST(RiemannSums, WindowsShrink) {
  const auto g = builtin_function("gaussian");
  const auto rs = riemann_sum_decay(g, {10, 20, 40}, g);
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.kind;
}

TEST(Reports, CsvDeterministic) {
  const auto r = make_report("x", nlohmann::ordered_json{{"a", 0.1}}, cplx(1.0 / 3, 0), cplx(0.25, 0), 1.0);
  const std::string row = to_csv_row(r);
  EXPECT_EQ(row, "x,\"{\"\"a\"\":0.1}\",0.33333333333333331,0,0.25,0,0.083333333333333315,1,true");
  EXPECT_EQ(row, to_csv_row(r));
}

TEST(Reports, RefinementCheck) {
  EXPECT_TRUE(refinement_check({1, 2, 3}, {1.0, 0.6, 0.5}, 0).pass);
  EXPECT_TRUE(refinement_check({1, 2, 3}, {1.0, 1.9, 3.7}, 0).pass);
  EXPECT_FALSE(refinement_check({1, 2, 3}, {1.0, 2.1, 0.1}, 0).pass);
  EXPECT_TRUE(refinement_check({1, 2}, {0.0, 1e-10}, 1e-9).pass);
}
