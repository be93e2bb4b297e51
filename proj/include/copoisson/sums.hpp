#pragma once

// Modified sums F, K, A and A* with truncation control.

#include <copoisson/funcspace.hpp>

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace copoisson {

enum class SumKind { F, K, A, A_star };

inline const char* to_string(SumKind k) {
  switch (k) {
    case SumKind::F: return "F";
    case SumKind::K: return "K";
    case SumKind::A: return "A";
    case SumKind::A_star: return "A_star";
  }
  return "?";
}

struct SumSpec {
  SumKind kind = SumKind::F;
  ParityFunction f;
  std::optional<std::size_t> n_max;  // empty: exact range (compact support) or majorant choice
  double tail_bound = 0.0;
};

struct SumResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

// Process-wide cap on series terms (config key series.nmax).
inline std::size_t& default_series_nmax() {
  static std::size_t n = 10'000'000;
  return n;
}

struct SumOptions {
  double tail_target = 1e-12;
  std::size_t n_cap = default_series_nmax();
};

namespace detail {

inline std::size_t index_floor(double v) { return v <= 0 ? 0 : static_cast<std::size_t>(std::floor(v)); }

// Smallest U with tail(U) <= target, by doubling then bisection.
inline double majorant_cutoff(const TailMajorant& m, double target) {
  double hi = 1.0;
  while (m.tail(hi) > target) {
    hi *= 2;
    if (hi > 1e300) throw DivergenceError("tail majorant does not decay");
  }
  double lo = 0.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (m.tail(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

// Sum of f(n/x)/x over n >= 1 (kind F) or f(n x) (kind A).
inline SumResult forward_sum(const ParityFunction& f, double x, bool scaled, const SumOptions& opt,
                             std::optional<std::size_t> n_max) {
  // argument u_n = n * step, weight w
  const double step = scaled ? 1.0 / x : x;
  const double w = scaled ? 1.0 / x : 1.0;
  SumResult r;
  std::size_t lo = 1, hi = 0;
  if (f.support() && !n_max) {
    lo = std::max<std::size_t>(1, index_floor(f.support()->lo / step));
    hi = index_floor(f.support()->hi / step) + 1;
  } else {
    if (n_max) {
      hi = *n_max;
    } else {
      if (!f.tail_majorant()) throw DivergenceError(f.name() + ": no tail majorant for a non-compact sum");
      // sum_{n>N} k(n step) w <= (w/step) int_{N step}^inf k
      const double U = majorant_cutoff(*f.tail_majorant(), opt.tail_target * step / w);
      hi = static_cast<std::size_t>(std::ceil(U / step));
    }
    if (hi > opt.n_cap) hi = opt.n_cap;
    if (f.tail_majorant()) r.tail_bound = f.tail_majorant()->tail(hi * step) * w / step;
  }
  double s = 0.0;
  // Sum from the small terms up.
  for (std::size_t n = hi; n >= lo && n >= 1; --n) s += f.half_line(n * step);
  r.value = s * w;
  r.terms = hi >= lo ? hi - lo + 1 : 0;
  return r;
}

}  // namespace detail

// F(x) = sum f(n/x)/x - int f;  F(0) = -int f.
inline SumResult eval_F_detailed(const ParityFunction& f, double x, const SumOptions& opt = {},
                                 std::optional<std::size_t> n_max = std::nullopt) {
  if (x < 0) throw std::invalid_argument("eval_F: x must be >= 0");
  if (x == 0) return {-f.integral(), 0.0, 0};
  auto r = detail::forward_sum(f, x, true, opt, n_max);
  r.value -= f.integral();
  return r;
}

// A_f(x) = sum f(n x) - (int f)/x.
inline SumResult eval_A_detailed(const ParityFunction& f, double x, const SumOptions& opt = {},
                                 std::optional<std::size_t> n_max = std::nullopt) {
  if (!(x > 0)) throw std::invalid_argument("eval_A: x must be > 0");
  auto r = detail::forward_sum(f, x, false, opt, n_max);
  r.value -= f.integral() / x;
  return r;
}

// K(x) = sum f(x/n)/n - int f(1/u)/u du;  K(0) = -int f(1/u)/u du.
// Non-compact f: the tail n > N is replaced by the midpoint integral
// int_{N+1/2}^inf f(x/t)/t dt = int_0^{x/(N+1/2)} f(u)/u du.
inline SumResult eval_K_detailed(const ParityFunction& f, double x, const SumOptions& opt = {},
                                 std::optional<std::size_t> n_max = std::nullopt) {
  if (x < 0) throw std::invalid_argument("eval_K: x must be >= 0");
  const double J = f.inverted_integral();
  if (x == 0) return {-J, 0.0, 0};
  SumResult r;
  if (f.support() && f.support()->lo > 0 && !n_max) {
    const std::size_t lo = std::max<std::size_t>(1, detail::index_floor(x / f.support()->hi));
    const std::size_t hi = detail::index_floor(x / f.support()->lo) + 1;
    double s = 0.0;
    for (std::size_t n = hi; n >= lo && n >= 1; --n) s += f.half_line(x / n) / n;
    r.value = s - J;
    r.terms = hi - lo + 1;
    return r;
  }
  auto h = [&](double t) { return f.half_line(x / t) / t; };
  std::size_t N = n_max.value_or(64);
  auto midpoint_error = [&](std::size_t n) {
    const double t = n + 0.5, d = 1e-3 * t;
    return std::abs(h(t + d) - h(t - d)) / (2 * d) / 12;
  };
  if (!n_max) {
    N = std::max<std::size_t>(N, static_cast<std::size_t>(std::ceil(4 * x)));
    while (midpoint_error(N) > opt.tail_target && 2 * N <= opt.n_cap) N *= 2;
  }
  double s = 0.0;
  for (std::size_t n = N; n >= 1; --n) s += h(static_cast<double>(n));
  const double c = x / (N + 0.5);
  const double head = integrate_adaptive([&](double u) { return f.half_line(u) / u; }, f.panels(0.0, c), 1e-15).value;
  r.value = s + head - J;
  r.tail_bound = midpoint_error(N);
  r.terms = N;
  return r;
}

inline SumResult eval_A_star_detailed(const ParityFunction& f, double x, const SumOptions& opt = {}) {
  auto r = eval_A_detailed(f, x, opt);
  r.value += 0.5 * f.integral() / x;
  return r;
}

inline double eval_F(const ParityFunction& f, double x) { return eval_F_detailed(f, x).value; }
inline double eval_K(const ParityFunction& f, double x) { return eval_K_detailed(f, x).value; }
inline double eval_A(const ParityFunction& f, double x) { return eval_A_detailed(f, x).value; }
inline double eval_A_star(const ParityFunction& f, double x) { return eval_A_star_detailed(f, x).value; }

inline SumResult eval_sum(const SumSpec& spec, double x, const SumOptions& opt = {}) {
  switch (spec.kind) {
    case SumKind::F: return eval_F_detailed(spec.f, x, opt, spec.n_max);
    case SumKind::K: return eval_K_detailed(spec.f, x, opt, spec.n_max);
    case SumKind::A: return eval_A_detailed(spec.f, x, opt, spec.n_max);
    case SumKind::A_star: return eval_A_star_detailed(spec.f, x, opt);
  }
  return {};
}

// Points where terms of the sum enter or leave, or cross a breakpoint of f,
// inside (lo, hi). Only for compactly supported f away from 0.
inline std::vector<double> sum_breakpoints(SumKind kind, const ParityFunction& f, double lo, double hi,
                                           std::size_t limit = 200000) {
  std::vector<double> out;
  if (!f.support() || f.support()->lo <= 0 || !(hi > lo)) return out;
  std::vector<double> pts{f.support()->lo, f.support()->hi};
  for (double p : f.breakpoints(f.support()->lo, f.support()->hi)) pts.push_back(p);
  for (double p : pts) {
    // F: n/x = p -> x = n/p;  K: x/n = p -> x = n p;  A: n x = p -> x = p/n.
    for (std::size_t n = 1; n < limit; ++n) {
      double x = 0;
      if (kind == SumKind::F) x = n / p;
      else if (kind == SumKind::K) x = n * p;
      else x = p / n;
      if (kind == SumKind::A || kind == SumKind::A_star) {
        if (x <= lo) break;
        if (x < hi) out.push_back(x);
      } else {
        if (x >= hi) break;
        if (x > lo) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace copoisson
