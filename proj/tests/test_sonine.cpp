#include <copoisson/sonine.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace copoisson;
constexpr double pi = std::numbers::pi;

namespace {
const SonineSolution& plus1() {
  static const auto s = solve_phi(1.0, SonineSign::plus, 64);
  return s;
}
const SonineSolution& minus1() {
  static const auto s = solve_phi(1.0, SonineSign::minus, 64);
  return s;
}
}  // namespace

TEST(Solve, ResidualAndNorm) {
  for (const auto* s : {&plus1(), &minus1()}) {
    EXPECT_LE(s->residual_inf, 1e-10);
    EXPECT_LT(s->op_norm_estimate, 1.0);
    double w = 0.0;
    for (double x : s->weights) {
      EXPECT_GT(x, 0.0);
      w += x;
    }
    EXPECT_NEAR(w, 1.0, 1e-14);
  }
}

TEST(Solve, NodeRefinement) {
  const auto fine = solve_phi(1.0, SonineSign::plus, 128);
  for (double x : {0.0, 0.3, 0.77, 1.0}) EXPECT_NEAR(phi_extend(plus1(), x), phi_extend(fine, x), 1e-12);
}

TEST(Solve, ExtensionConsistency) {
  const auto& s = plus1();
  for (std::size_t j = 0; j < s.nodes.size(); j += 9) EXPECT_NEAR(phi_extend(s, s.nodes[j]), s.phi_values[j], 1e-12);
  EXPECT_EQ(phi_extend(s, -0.4), phi_extend(s, 0.4));
  // 2cos(2 pi a x) + O(1/x)
  for (double x : {10.0, 20.0, 40.0}) EXPECT_LT(std::abs(phi_extend(s, x) - 2 * std::cos(2 * pi * x)), 4.0 / x);
}

TEST(Solve, SmallGapRankOne) {
  const double a = 1e-3;
  const auto s = solve_phi(a, SonineSign::plus, 16);
  // kernel ~ rank one with mass 2a: phi(0) = 2/(1+2a)
  EXPECT_NEAR(phi_extend(s, 0.0), 2 / (1 + 2 * a), 1e-6);
}

TEST(Solve, InvalidInput) {
  EXPECT_THROW(solve_phi(-1.0, SonineSign::plus), std::invalid_argument);
  EXPECT_THROW(solve_phi(1.0, SonineSign::plus, 4), std::invalid_argument);
}

TEST(Solve, LargeGapIsSingular) {
  EXPECT_THROW(solve_phi(2.5, SonineSign::minus, 64), SingularSystemError);
}

TEST(Entire, SymmetryAndReality) {
  const EntireMellin A(plus1());
  for (const cplx s : {cplx(0.7, 3.0), cplx(0.3, 1.0), cplx(0.6, -8.0), cplx(0.9, 12.0)}) {
    const cplx v = A(s), w = A(1.0 - s);
    EXPECT_LE(std::abs(v - w) / (1 + std::abs(v)), 1e-6) << s;
    EXPECT_LE(std::abs(A(std::conj(s)) - std::conj(v)), 1e-12) << s;
  }
  for (double t : {1.0, 5.0, 10.0}) {
    const cplx v = A(cplx(0.5, t));
    EXPECT_LE(std::abs(v.imag()), 1e-8 * (1 + std::abs(v))) << t;
  }
  EXPECT_THROW(A(cplx(1.5, 0)), std::domain_error);
}

TEST(Entire, MinusSolutionRealOnLine) {
  const EntireMellin B(minus1());
  for (double t : {1.0, 5.0, 10.0}) {
    const cplx v = B(cplx(0.5, t));
    EXPECT_LE(std::abs(v.imag()), 1e-8 * (1 + std::abs(v))) << t;
  }
  // odd under s -> 1 - s
  for (const cplx s : {cplx(0.7, 2.0), cplx(0.9, 5.0)})
    EXPECT_LE(std::abs(B(s) + B(1.0 - s)) / (1 + std::abs(B(s))), 1e-6) << s;
}

TEST(Zeros, BisectedSignChanges) {
  const EntireMellin A(plus1());
  const auto z = critical_line_zeros(A, 30.0);
  EXPECT_GE(z.count_T, 3u);
  for (const auto& c : z.zeros) {
    EXPECT_LT(A.critical_scalar(c.t - 1e-7) * A.critical_scalar(c.t + 1e-7), 0.0) << c.t;
    EXPECT_LE(c.residual, 1e-6 * (1 + c.local_scale));
  }
  for (std::size_t i = 1; i < z.zeros.size(); ++i) EXPECT_GT(z.zeros[i].t, z.zeros[i - 1].t);
  EXPECT_THROW(critical_line_zeros(A, -1.0), std::invalid_argument);
}
