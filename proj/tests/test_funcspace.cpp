#include <copoisson/funcspace.hpp>
#include <copoisson/quad.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace copoisson;

TEST(Builtins, GaussianValues) {
  const auto g = builtin_function("gaussian");
  EXPECT_DOUBLE_EQ(g(1.0), std::exp(-std::numbers::pi));
  EXPECT_DOUBLE_EQ(g(0.0), 1.0);
  EXPECT_TRUE(g.is_l2());
  EXPECT_EQ(g.parity(), Parity::even);
}

TEST(Builtins, BumpSupport) {
  const auto b = parse_function("bump:1,2");
  EXPECT_EQ(b(0.5), 0.0);
  EXPECT_EQ(b(2.5), 0.0);
  EXPECT_GT(b(1.5), 0.0);
  ASSERT_TRUE(b.support());
  EXPECT_EQ(b.support()->lo, 1.0);
  EXPECT_EQ(b.support()->hi, 2.0);
  EXPECT_TRUE(b.satisfies_c());
}

TEST(Builtins, FracpartOverX) {
  const auto f = builtin_function("fracpart_over_x");
  EXPECT_NEAR(f(1.5), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(f(2.0), 0.0);
  EXPECT_FALSE(f.is_l1());
}

TEST(Builtins, OddExtension) {
  const auto f = parse_function("odd_bump:1,2");
  EXPECT_EQ(f(-1.5), -f(1.5));
  EXPECT_EQ(f(0.0), 0.0);
  const auto g = parse_function("bump:1,2");
  EXPECT_EQ(g(-1.3), g(1.3));
}

TEST(Builtins, UnknownNameAndBadParams) {
  EXPECT_THROW(parse_function("nosuch"), std::invalid_argument);
  EXPECT_THROW(parse_function("bump:1,x"), std::invalid_argument);
  EXPECT_THROW(parse_function("bump:2,1"), std::invalid_argument);
}

TEST(Builtins, KnownIntegralsMatchQuadrature) {
  for (const char* spec : {"poly_log_tail:3", "triangle:1,2", "indicator:1,2"}) {
    const auto f = parse_function(spec);
    const double direct = f.integrate_weighted([](double) { return 1.0; });
    EXPECT_NEAR(f.integral(), direct, 1e-10) << spec;
    const double inv = f.integrate_weighted([](double v) { return 1.0 / v; });
    EXPECT_NEAR(f.inverted_integral(), inv, 1e-10) << spec;
  }
}

TEST(Builtins, KnownTransforms) {
  for (const char* spec : {"gaussian", "tent:1", "tent:0.5"}) {
    const auto f = parse_function(spec);
    ASSERT_TRUE(f.known_transform()) << spec;
    for (double y : {0.0, 0.37, 1.1})
      EXPECT_NEAR(cosine_transform(f, y, 1e-12), f.known_transform()(y), 1e-10) << spec << " y=" << y;
  }
  const auto fj = parse_function("fejer:1");
  EXPECT_NEAR(fj.known_transform()(0.25), 0.75, 1e-15);
}

TEST(ConditionC, BumpSandwich) {
  const auto b = parse_function("bump:1,2");
  const double l1 = b.integrate_weighted([](double) { return 1.0; });
  const double c = condition_c_norm(b);
  EXPECT_GE(c, 1.5 * l1 - 1e-12);
  EXPECT_LE(c, 2.0 * l1 + 1e-12);
}

TEST(ConditionC, GaussianDivergesAtZero) {
  // int e^{-pi x^2}/x dx diverges at 0.
  EXPECT_THROW(condition_c_norm(builtin_function("gaussian")), DivergenceError);
}

TEST(ConditionC, FracpartDiverges) {
  EXPECT_THROW(condition_c_norm(builtin_function("fracpart_over_x")), DivergenceError);
}

TEST(Transforms, InvertSwapsIntegrals) {
  const auto b = parse_function("bump:1,2");
  const auto ib = invert(b);
  EXPECT_NEAR(ib.integral(), b.inverted_integral(), 1e-13);
  EXPECT_NEAR(ib.inverted_integral(), b.integral(), 1e-13);
  EXPECT_NEAR(ib(0.7), b(1 / 0.7) / 0.7, 1e-15);
  ASSERT_TRUE(ib.support());
  EXPECT_DOUBLE_EQ(ib.support()->lo, 0.5);
}

TEST(Transforms, DilateScalesTransform) {
  const auto g = builtin_function("gaussian");
  const auto d = dilate(g, 2.0);
  ASSERT_TRUE(d.known_transform());
  EXPECT_NEAR(d.known_transform()(0.3), std::exp(-std::numbers::pi * 0.36), 1e-15);
  EXPECT_NEAR(cosine_transform(d, 0.3, 1e-12), d.known_transform()(0.3), 1e-10);
  EXPECT_NEAR(d.integral(), g.integral(), 1e-13);
}

TEST(Transforms, CombineIsLinear) {
  const auto a = parse_function("bump:1,2"), b = parse_function("triangle:1,2");
  const auto c = combine(2.0, a, -1.0, b);
  EXPECT_NEAR(c(1.3), 2 * a(1.3) - b(1.3), 1e-15);
  EXPECT_THROW(combine(1.0, a, 1.0, parse_function("odd_bump:1,2")), std::invalid_argument);
}

TEST(GridFunctionTest, InterpolatesAndExtends) {
  const auto gf = GridFunction::sample([](double x) { return x * x; }, {0.0, 1.0, 2.0}, GridFunction::Kind::even);
  EXPECT_DOUBLE_EQ(gf(0.5), 0.5);
  EXPECT_DOUBLE_EQ(gf(-1.5), 2.5);
  EXPECT_THROW(GridFunction({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
}
