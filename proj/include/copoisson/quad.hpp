#pragma once

// Cosine/sine transforms, Dirichlet-kernel integrals and Abel-regularized
// transforms of ParityFunctions.

#include <copoisson/funcspace.hpp>
#include <copoisson/integrate.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace copoisson {

enum class Kernel { cosine, sine };

inline double kernel_value(Kernel k, double z) { return k == Kernel::cosine ? std::cos(z) : std::sin(z); }

namespace detail {

// int_0^inf 2 k(2 pi xi x) f(x) dx, with an optional damping e^{-eps x}.
inline QuadResult<double> half_line_transform(const ParityFunction& f, double xi, double tol, Kernel kern) {
  const double w = 2 * std::numbers::pi * xi;
  auto g = [&](double x) { return 2 * kernel_value(kern, w * x) * f.half_line(x); };
  if (xi == 0.0) {
    if (kern == Kernel::sine) return {0.0, 0.0, 1};
    return {2 * f.integrate_weighted([](double) { return 1.0; }, tol / 2), tol, 1};
  }
  const double half = 0.5 / xi;
  if (f.support()) {
    const auto& s = *f.support();
    return integrate_adaptive(g, f.panels(s.lo, s.hi, half), tol);
  }
  if (!f.is_l1()) throw DivergenceError(f.name() + ": not integrable, use abel_transform");
  // Head up to a kernel zero past x = 4, then half periods with acceleration.
  const double offset = kern == Kernel::cosine ? 0.5 * half : 0.0;
  const double x0 = offset + half * std::ceil((std::max(4.0, 2 * half) - offset) / half);
  // A majorant that is negligible before x0 makes the tail unnecessary.
  if (f.tail_majorant()) {
    const auto& m = *f.tail_majorant();
    double X = 1.0;
    while (X < x0 && m.tail(X) > 1e-3 * tol) X *= 1.25;
    if (X < x0) return integrate_adaptive(g, f.panels(0.0, X, std::min(half, 0.5)), tol);
  }
  auto head = integrate_adaptive(g, f.panels(0.0, x0, std::min(half, std::max(1.0, x0 / 64))), tol / 4);
  auto panel = [&](double a, double b) { return integrate_adaptive(g, f.panels(a, b), tol / 64).value; };
  auto tail = sum_oscillatory_panels(panel, x0, half, tol / 2);
  return {head.value + tail.value, head.err_estimate + tail.err_estimate,
          head.evaluations + 15 * tail.evaluations};
}

}  // namespace detail

// Process-wide default transform tolerance (config key quad.tol).
inline double& default_quad_tol() {
  static double tol = 1e-10;
  return tol;
}

// int_0^inf 2 cos(2 pi xi x) f(x) dx.
inline double cosine_transform(const ParityFunction& f, double xi, double tol = default_quad_tol()) {
  return detail::half_line_transform(f, std::abs(xi), tol, Kernel::cosine).value;
}

// int_0^inf 2 sin(2 pi xi x) f(x) dx.
inline double sine_transform(const ParityFunction& f, double xi, double tol = default_quad_tol()) {
  const double v = detail::half_line_transform(f, std::abs(xi), tol, Kernel::sine).value;
  return xi < 0 ? -v : v;
}

inline double transform(const ParityFunction& f, double xi, double tol = default_quad_tol()) {
  return f.parity() == Parity::even ? cosine_transform(f, xi, tol) : sine_transform(f, xi, tol);
}

// sin(2 pi L u)/(pi u), with its limit 2L at u = 0.
inline double dirichlet_kernel(double lambda, double u) {
  const double z = 2 * std::numbers::pi * lambda * u;
  if (std::abs(z) < 1e-5) return 2 * lambda * (1 - z * z / 6);
  return std::sin(z) / (std::numbers::pi * u);
}

struct DirichletResult {
  double value = 0.0;
  double err_estimate = 0.0;
  bool flagged = false;  // K(xi) not finite; nearest-sample value used
};

// int_0^X sin(2 pi L (t - xi))/(pi (t - xi)) K(t) dt, split at t = xi.
inline DirichletResult dirichlet_kernel_integral(const std::function<double(double)>& K, double xi, double lambda,
                                                 double X, double tol = 1e-10,
                                                 const std::vector<double>& breaks = {}) {
  if (!(X > xi && xi >= 0 && lambda > 0)) throw std::invalid_argument("dirichlet_kernel_integral: need X > xi >= 0, L > 0");
  bool flagged = false;
  double kxi = K(xi);
  if (!std::isfinite(kxi)) {
    flagged = true;
    const double h = 1e-9 * std::max(1.0, xi);
    kxi = K(xi + h);
    if (!std::isfinite(kxi)) kxi = K(std::max(0.0, xi - h));
  }
  auto g = [&](double t) {
    if (t == xi) return 2 * lambda * kxi;
    return dirichlet_kernel(lambda, t - xi) * K(t);
  };
  const double half = 0.5 / lambda;
  std::vector<double> pts{0.0, X};
  if (xi > 0) pts.push_back(xi);
  for (double b : breaks)
    if (b > 0 && b < X) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<double> fine{pts.front()};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double w = pts[i + 1] - pts[i];
    const auto m = static_cast<std::size_t>(std::ceil(w / half));
    for (std::size_t j = 1; j < m; ++j) fine.push_back(pts[i] + w * j / m);
    fine.push_back(pts[i + 1]);
  }
  auto r = integrate_adaptive(g, fine, tol);
  return {r.value, r.err_estimate, flagged};
}

struct AbelResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::vector<double> eps;
  std::vector<double> ladder;
};

// Process-wide default eps ladder (config key abel.ladder).
inline std::vector<double>& default_abel_ladder() {
  static std::vector<double> l{0.04, 0.02, 0.01, 0.005};
  return l;
}

// Transform of e^{-eps u} f(u) for one eps.
inline double damped_transform(const ParityFunction& f, double xi, double eps, Kernel kern, double tol = 1e-11) {
  const double w = 2 * std::numbers::pi * std::abs(xi);
  const double X = 38.0 / eps;
  double hi = X;
  double lo = 0.0;
  if (f.support()) {
    lo = f.support()->lo;
    hi = std::min(X, f.support()->hi);
  }
  if (hi <= lo) return 0.0;
  auto g = [&](double x) { return 2 * kernel_value(kern, w * x) * std::exp(-eps * x) * f.half_line(x); };
  const double half = xi != 0.0 ? 0.5 / std::abs(xi) : 1.0;
  auto r = integrate_adaptive(g, f.panels(lo, hi, std::min(half, 1.0)), tol);
  return (kern == Kernel::sine && xi < 0) ? -r.value : r.value;
}

// Abel-regularized transform: damped transforms on a decreasing eps ladder,
// extrapolated to eps = 0 by Neville.
inline AbelResult abel_transform(const ParityFunction& f, double xi,
                                 const std::vector<double>& eps_ladder = default_abel_ladder(),
                                 std::optional<Kernel> kernel = std::nullopt, double tol = 1e-11) {
  if (eps_ladder.size() < 3) throw std::invalid_argument("abel_transform: ladder needs at least 3 values");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0)) throw std::invalid_argument("abel_transform: eps must be positive");
    if (i && !(eps_ladder[i] < eps_ladder[i - 1])) throw std::invalid_argument("abel_transform: ladder must decrease");
  }
  const Kernel kern = kernel.value_or(f.parity() == Parity::even ? Kernel::cosine : Kernel::sine);
  AbelResult r;
  r.eps = eps_ladder;
  for (double e : eps_ladder) r.ladder.push_back(damped_transform(f, xi, e, kern, tol));
  const auto ex = neville_to_zero(r.eps, r.ladder);
  r.value = ex.value;
  r.err_estimate = ex.err_estimate;
  // Differences must shrink along the ladder, up to rounding.
  const double floor = 1e-12 * (1 + std::abs(r.value));
  for (std::size_t i = 2; i < r.ladder.size(); ++i) {
    const double d1 = std::abs(r.ladder[i - 1] - r.ladder[i - 2]);
    const double d2 = std::abs(r.ladder[i] - r.ladder[i - 1]);
    if (d2 > d1 + floor) throw LadderError("abel_transform: ladder differences not decreasing", r.value);
  }
  return r;
}

}  // namespace copoisson
