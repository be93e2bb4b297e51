#include <copoisson/integrate.hpp>
#include <copoisson/quad.hpp>
#include <copoisson/mellin.hpp>
#include <copoisson/special.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace copoisson;
constexpr double pi = std::numbers::pi;

TEST(Adaptive, Elementary) {
  EXPECT_EQ(integrate_adaptive([](double) { return 0.0; }, std::vector<double>{0.0, 1.0}, 1e-12).value, 0.0);
  EXPECT_NEAR(integrate_adaptive([](double x) { return x; }, std::vector<double>{0.0, 1.0}, 1e-12).value, 0.5,
              1e-15);
  const auto b = parse_function("bump:1,2");
  EXPECT_GT(integrate_adaptive([&](double x) { return b(x); }, std::vector<double>{1.0, 2.0}, 1e-12).value, 0.0);
}

TEST(Adaptive, GaussLegendreWeights) {
  const auto gl = gauss_legendre(24);
  double s = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    s += gl.w[i];
    m2 += gl.w[i] * gl.x[i] * gl.x[i];
  }
  EXPECT_NEAR(s, 2.0, 1e-14);
  EXPECT_NEAR(m2, 2.0 / 3.0, 1e-14);
}

TEST(Extrapolation, NevilleRecoversPolynomialLimit) {
  std::vector<double> h{0.4, 0.2, 0.1, 0.05}, v;
  for (double x : h) v.push_back(3 + 2 * x - x * x);
  EXPECT_NEAR(neville_to_zero(h, v).value, 3.0, 1e-12);
}

TEST(CosineTransform, GaussianSelfDual) {
  const auto g = builtin_function("gaussian");
  EXPECT_NEAR(cosine_transform(g, 1.0), std::exp(-pi), 1e-10);
  EXPECT_NEAR(cosine_transform(g, 1e-6), 1.0, 1e-10);
  EXPECT_NEAR(cosine_transform(g, 2.0), std::exp(-4 * pi), 1e-10);
}

TEST(CosineTransform, ZeroFrequencyIsTwiceIntegral) {
  const auto b = parse_function("bump:1,2");
  EXPECT_NEAR(cosine_transform(b, 0.0), 2 * b.integral(), 1e-12);
  EXPECT_EQ(sine_transform(parse_function("odd_bump:1,2"), 0.0), 0.0);
}

TEST(CosineTransform, BumpAgainstFineGrid) {
  const auto b = parse_function("bump:1,2");
  const int n = 200000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = 1 + (i + 0.5) / n;
    s += 2 * std::cos(pi * x) * b(x);
  }
  EXPECT_NEAR(cosine_transform(b, 0.5), s / n, 1e-9);
}

TEST(SineTransform, XGaussian) {
  const auto f = builtin_function("x_gaussian");
  for (double y : {0.3, 0.7, 1.4}) EXPECT_NEAR(sine_transform(f, y), y * std::exp(-pi * y * y), 1e-10);
  EXPECT_NEAR(sine_transform(f, -0.7), -sine_transform(f, 0.7), 1e-15);
}

TEST(DirichletKernel, ConstantOneAtZero) {
  // int_0^1 sin(2 pi L t)/(pi t) dt = Si(2 pi L)/pi -> 1/2.
  const auto r = dirichlet_kernel_integral([](double) { return 1.0; }, 0.0, 50.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, 0.5, 0.01);
  EXPECT_EQ(dirichlet_kernel_integral([](double) { return 0.0; }, 0.3, 10, 1).value, 0.0);
}

TEST(Abel, GaussianIsNoOp) {
  const auto r = abel_transform(builtin_function("gaussian"), 1.0);
  EXPECT_NEAR(r.value, std::exp(-pi), 1e-6);
}

TEST(Abel, FracpartAtOne) {
  // At the jump of {v} the Abel limit takes the mean of -{1-} and -{1+}:
  // -1/2 + int_1^inf {u}/u^2 du = 1/2 - gamma.
  const auto r = abel_transform(builtin_function("fracpart_over_x"), 1.0);
  EXPECT_NEAR(r.value, 0.5 - std::numbers::egamma, 1e-3);
  const auto near = abel_transform(builtin_function("fracpart_over_x"), 1.3);
  EXPECT_NEAR(near.value, -0.3 / 1.3 + fracpart_tail_integral(1.3), 1e-3);
}

TEST(Abel, LadderValidation) {
  const auto g = builtin_function("gaussian");
  EXPECT_THROW(abel_transform(g, 1.0, {0.1, 0.05}), std::invalid_argument);
  EXPECT_THROW(abel_transform(g, 1.0, {0.05, 0.1, 0.01}), std::invalid_argument);
}

TEST(Zeta, KnownValues) {
  EXPECT_NEAR(zeta(2.0).value.real(), pi * pi / 6, 1e-13);
  EXPECT_NEAR(zeta(0.5).value.real(), -1.4603545088095868, 1e-12);
  EXPECT_NEAR(zeta(-1.0).value.real(), -1.0 / 12, 1e-13);
  EXPECT_THROW(zeta(1.0), PoleError);
  EXPECT_NEAR(std::abs(zeta(cplx(0.5, 14.134725141734693)).value), 0.0, 1e-9);
}

TEST(Zeta, FunctionalEquation) {
  for (int i = 0; i < 20; ++i) {
    const cplx s(0.05 + 0.045 * i, -30 + 3.1 * i);
    const cplx lhs = zeta(s).value, rhs = chi(s) * zeta(1.0 - s).value;
    EXPECT_LE(std::abs(lhs - rhs) / std::abs(lhs), 1e-8) << s;
  }
  for (double t : {1.0, 5.0, 13.0}) EXPECT_NEAR(std::abs(chi(cplx(0.5, t))), 1.0, 1e-13);
}

TEST(Gamma, Recurrence) {
  EXPECT_NEAR(std::abs(gamma_complex(0.5) - std::sqrt(pi)), 0.0, 1e-14);
  const cplx s(2, 3);
  EXPECT_LE(std::abs(gamma_complex(s + 1.0) - s * gamma_complex(s)) / std::abs(gamma_complex(s + 1.0)), 1e-13);
  EXPECT_EQ(rgamma(-2.0), cplx(0.0));
}
