#include <copoisson/sums.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace copoisson;

TEST(SumF, EmptyRangeGivesMinusIntegral) {
  const auto b = parse_function("bump:1,2");
  EXPECT_NEAR(eval_F(b, 0.5), -b.integral(), 1e-15);
  EXPECT_EQ(eval_F(builtin_function("zero"), 3.0), 0.0);
  EXPECT_NEAR(eval_F(b, 0.0), -b.integral(), 1e-15);
}

TEST(SumF, ElevenTerms) {
  const auto b = parse_function("bump:1,2");
  double s = 0.0;
  for (int n = 10; n <= 20; ++n) s += b(n / 10.0);
  EXPECT_NEAR(eval_F(b, 10.0), s / 10 - b.integral(), 1e-14);
}

TEST(SumK, Examples) {
  const auto b = parse_function("bump:1,2");
  EXPECT_NEAR(eval_K(b, 0.5), -b.inverted_integral(), 1e-15);
  const double s = b(5.0 / 3) / 3 + b(5.0 / 4) / 4 + b(1.0) / 5;
  EXPECT_NEAR(eval_K(b, 5.0), s - b.inverted_integral(), 1e-14);
}

TEST(SumA, Examples) {
  const auto b = parse_function("bump:1,2");
  EXPECT_NEAR(eval_A(b, 3.0), -b.integral() / 3, 1e-15);
  // bounded by the total variation as x -> 0
  EXPECT_LT(std::abs(eval_A(b, 0.01)), 2.0);
  EXPECT_NEAR(eval_A_star(b, 3.0) - eval_A(b, 3.0), 0.5 * b.integral() / 3, 1e-15);
  EXPECT_THROW(eval_A(b, 0.0), std::invalid_argument);
}

TEST(SumK, NonCompactTailModel) {
  // f = gaussian has J infinite; x2_gaussian has finite J.
  const auto f = builtin_function("x2_gaussian");
  const auto r = eval_K_detailed(f, 2.0);
  EXPECT_LT(r.tail_bound, 1e-10);
  // Direct brute-force sum with an integral tail.
  double s = 0.0;
  for (int n = 1; n <= 200000; ++n) s += f(2.0 / n) / n;
  const double c = 2.0 / 200000.5;
  s += f.integrate_weighted([&](double u) { return u < c ? 1.0 / u : 0.0; }, 1e-15);
  EXPECT_NEAR(r.value, s - f.inverted_integral(), 1e-8);
}

TEST(SumF, SeriesCapDefault) {
  const std::size_t saved = default_series_nmax();
  default_series_nmax() = 5;
  SumOptions opt;
  EXPECT_EQ(opt.n_cap, 5u);
  default_series_nmax() = saved;
}

TEST(Breakpoints, BumpFEntryPoints) {
  const auto b = parse_function("bump:1,2");
  const auto br = sum_breakpoints(SumKind::F, b, 0.5, 3.0);
  EXPECT_FALSE(br.empty());
  for (double p : br) {
    EXPECT_GT(p, 0.5);
    EXPECT_LT(p, 3.0);
  }
}
