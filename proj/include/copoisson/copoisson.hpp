#pragma once

// Verifiers for the co-Poisson identities: integral form, truncated
// transforms against Dirichlet integrals, Dirichlet values, pointwise form,
// almost-sure Poisson, Duffin's odd formula, Kahane pairs, Riemann sums.

#include <copoisson/funcspace.hpp>
#include <copoisson/quad.hpp>
#include <copoisson/report.hpp>
#include <copoisson/sums.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

namespace copoisson {

namespace detail {

using BreakFn = std::function<std::vector<double>(double, double)>;

inline std::vector<double> merge_panels(double lo, double hi, const BreakFn& brk, double max_len) {
  std::vector<double> pts{lo};
  if (brk)
    for (double p : brk(lo, hi))
      if (p > lo && p < hi) pts.push_back(p);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (max_len <= 0) return pts;
  std::vector<double> out{lo};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double w = pts[i + 1] - pts[i];
    const auto m = static_cast<std::size_t>(std::ceil(w / max_len));
    for (std::size_t j = 1; j < m; ++j) out.push_back(pts[i] + w * j / m);
    out.push_back(pts[i + 1]);
  }
  return out;
}

// int_0^inf g over [0,1] then doubling shells until three consecutive shells
// are negligible; `end` caps the domain when finite.
template <class G>
double integrate_shells(const G& g, const BreakFn& brk, double tol, double end = INFINITY, double max_len = 0.5) {
  double total = 0.0;
  double lo = 0.0, hi = std::min(1.0, end);
  int small = 0;
  for (int k = 0; k < 60 && lo < end; ++k) {
    const double c = integrate_adaptive(g, merge_panels(lo, hi, brk, max_len), tol / 8).value;
    total += c;
    small = std::abs(c) < tol / 8 ? small + 1 : 0;
    if (small >= 3) return total;
    lo = hi;
    hi = std::min(2 * hi, end);
  }
  if (lo < end) throw DivergenceError("integral over half line did not settle");
  return total;
}

inline BreakFn sum_breaks(SumKind kind, const ParityFunction& f) {
  return [kind, f](double lo, double hi) { return sum_breakpoints(kind, f, lo, hi); };
}

inline BreakFn join(BreakFn a, BreakFn b) {
  return [a, b](double lo, double hi) {
    std::vector<double> out;
    if (a) out = a(lo, hi);
    if (b) {
      auto v = b(lo, hi);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };
}

inline BreakFn own_breaks(const ParityFunction& f) {
  return [f](double lo, double hi) { return f.breakpoints(lo, hi); };
}

inline nlohmann::ordered_json fparams(const ParityFunction& f) {
  nlohmann::ordered_json j;
  j["f"] = f.name();
  return j;
}

}  // namespace detail

// Checks that psi is the cosine (or sine) transform of phi at a few points.
inline void require_transform_pair(const ParityFunction& phi, const ParityFunction& psi, double tol = 1e-8) {
  if (phi.parity() != psi.parity()) throw std::invalid_argument("hypothesis: pair parity mismatch");
  for (double y : {0.0, 0.31, 0.77, 1.6}) {
    const double t = transform(phi, y, 1e-11);
    if (std::abs(t - psi(y)) > tol * (1 + std::abs(psi(y))))
      throw std::invalid_argument("hypothesis: " + phi.name() + " and " + psi.name() + " are not a transform pair");
  }
}

// int_0^inf phi F dx = int_0^inf psi K dy.
inline IdentityReport integral_identity(const ParityFunction& f, const ParityFunction& phi, const ParityFunction& psi,
                                        double tol = 1e-7) {
  require_transform_pair(phi, psi);
  const double qtol = 1e-12;
  auto lhs_g = [&](double x) { return phi(x) * eval_F(f, x); };
  auto rhs_g = [&](double y) { return psi(y) * eval_K(f, y); };
  const double lend = phi.support() ? phi.support()->hi : INFINITY;
  const double rend = psi.support() ? psi.support()->hi : INFINITY;
  const double lhs =
      detail::integrate_shells(lhs_g, detail::join(detail::sum_breaks(SumKind::F, f), detail::own_breaks(phi)), qtol, lend);
  const double rhs =
      detail::integrate_shells(rhs_g, detail::join(detail::sum_breaks(SumKind::K, f), detail::own_breaks(psi)), qtol, rend);
  auto p = detail::fparams(f);
  p["phi"] = phi.name();
  p["psi"] = psi.name();
  return make_report("integral_identity", p, lhs, rhs, tol);
}

// int_0^L F(x) dx for each L, accumulated over the ladder.
inline std::vector<double> partial_F_integrals(const ParityFunction& f, const std::vector<double>& lambdas,
                                               double qtol = 1e-13) {
  std::vector<double> out;
  double acc = 0.0, lo = 0.0;
  auto g = [&](double x) { return eval_F(f, x); };
  auto brk = detail::sum_breaks(SumKind::F, f);
  for (double L : lambdas) {
    if (L < lo) throw std::invalid_argument("lambda ladder must increase");
    acc += integrate_adaptive(g, detail::merge_panels(lo, L, brk, 0.5), qtol).value;
    lo = L;
    out.push_back(acc);
  }
  return out;
}

// Extrapolated int_0^{->inf} F against K(0)/2.
inline IdentityReport improper_F_integral(const ParityFunction& f, const std::vector<double>& lambdas = {50, 100, 200},
                                          double tol = 1e-4) {
  if (lambdas.size() < 2) throw std::invalid_argument("improper_F_integral: ladder needs two values");
  const auto v = partial_F_integrals(f, lambdas);
  std::vector<double> h;
  for (double L : lambdas) h.push_back(1 / L);
  const auto ex = neville_to_zero(h, v);
  const double rhs = 0.5 * eval_K(f, 0.0);
  auto p = detail::fparams(f);
  p["lambdas"] = lambdas;
  p["partials"] = v;
  p["extrapolation_err"] = ex.err_estimate;
  if (v.size() >= 3) {
    const double d1 = std::abs(v[v.size() - 2] - v[v.size() - 3]), d2 = std::abs(v.back() - v[v.size() - 2]);
    if (d2 > 2 * d1 + 1e-12) throw LadderError("improper_F_integral: ladder not converging", ex.value);
  }
  return make_report("improper_F_integral", p, ex.value, rhs, tol);
}

// int_0^L 2 cos(2 pi xi x) F(x) dx.
inline double truncated_transform(const ParityFunction& f, double xi, double lambda, double qtol = 1e-13) {
  const double w = 2 * std::numbers::pi * xi;
  auto g = [&](double x) { return 2 * std::cos(w * x) * eval_F(f, x); };
  const double len = xi > 0 ? std::min(0.5, 0.5 / xi) : 0.5;
  return integrate_adaptive(g, detail::merge_panels(0.0, lambda, detail::sum_breaks(SumKind::F, f), len), qtol).value;
}

// truncated transform against the Dirichlet integral of
// sum f(t/n)/n over [0, X], minus int f(u)/u du.
inline IdentityReport truncated_transform_vs_dirichlet(const ParityFunction& f, double xi, double lambda, double X,
                                                       double tol = 1e-3) {
  if (!(X > xi && xi >= 0)) throw std::invalid_argument("need X > xi >= 0");
  const double J = f.inverted_integral();
  const double lhs = truncated_transform(f, xi, lambda);
  auto S = [&](double t) { return t <= 0 ? 0.0 : eval_K(f, t) + J; };
  const auto d = dirichlet_kernel_integral(S, xi, lambda, X, 1e-12, sum_breakpoints(SumKind::K, f, 0.0, X));
  auto p = detail::fparams(f);
  p["xi"] = xi;
  p["lambda"] = lambda;
  p["X"] = X;
  return make_report("truncated_transform_vs_dirichlet", p, lhs, d.value - J, tol);
}

// Same, along a lambda ladder; appends a refinement verdict to the last report.
inline std::vector<IdentityReport> truncated_transform_ladder(const ParityFunction& f, double xi,
                                                              const std::vector<double>& lambdas, double X,
                                                              double tol = 1e-3, double noise = 1e-9) {
  std::vector<IdentityReport> out;
  std::vector<double> defects;
  for (double L : lambdas) {
    out.push_back(truncated_transform_vs_dirichlet(f, xi, L, X, tol));
    defects.push_back(out.back().defect);
  }
  const auto rc = refinement_check(lambdas, defects, noise);
  if (!out.empty()) {
    out.back().params["refinement_defects"] = defects;
    out.back().params["refinement_pass"] = rc.pass;
    out.back().pass = out.back().pass && rc.pass;
  }
  return out;
}

// the same truncated transform equals the improper integral of K
// against the two Dirichlet kernels at t - xi and t + xi.
inline IdentityReport two_kernel_identity(const ParityFunction& f, double xi, double lambda, double T = 64,
                                          double tol = 1e-6) {
  const double lhs = truncated_transform(f, xi, lambda);
  auto g = [&](double t) {
    return (dirichlet_kernel(lambda, t - xi) + dirichlet_kernel(lambda, t + xi)) * eval_K(f, t);
  };
  auto brk = detail::sum_breaks(SumKind::K, f);
  const double len = 0.5 / lambda;
  // The integral is improper at infinity; sum unit blocks up to T and check
  // the last blocks are negligible.
  double rhs = 0.0, last = 0.0;
  for (double a = 0; a < T; a += 1) {
    last = integrate_adaptive(g, detail::merge_panels(a, a + 1, brk, len), 1e-13).value;
    rhs += last;
  }
  auto p = detail::fparams(f);
  p["xi"] = xi;
  p["lambda"] = lambda;
  p["T"] = T;
  p["last_block"] = last;
  return make_report("two_kernel_identity", p, lhs, rhs, tol);
}

struct DirichletPoint {
  double value = 0.0;
  double err_estimate = 0.0;
  std::vector<double> lambdas;
  std::vector<double> ladder;
};

// Limit over L of int_{xi-d}^{xi+d} sin(2 pi L (t-xi))/(pi (t-xi)) K(t) dt,
// K extended evenly. L is snapped so that L d is an integer; the ladder is
// extrapolated in 1/L.
inline DirichletPoint dirichlet_point_value(const ParityFunction& f, double xi, double delta,
                                            const std::vector<double>& lambdas = {100, 200, 400, 800},
                                            double tol = 1e-6) {
  if (!(delta > 0)) throw std::invalid_argument("dirichlet_point_value: need delta > 0");
  auto K = [&](double t) { return eval_K(f, std::abs(t)); };
  std::vector<double> brk;
  const double lo = xi - delta, hi = xi + delta;
  for (double p : sum_breakpoints(SumKind::K, f, 0.0, std::max(std::abs(lo), std::abs(hi)))) {
    if (p > lo && p < hi) brk.push_back(p);
    if (-p > lo && -p < hi) brk.push_back(-p);
  }
  if (lo < 0) brk.push_back(0.0);
  DirichletPoint r;
  for (double L0 : lambdas) {
    const double L = std::ceil(L0 * delta) / delta;
    auto g = [&](double t) { return t == xi ? 2 * L * K(xi) : dirichlet_kernel(L, t - xi) * K(t); };
    std::vector<double> pts{lo, xi, hi};
    pts.insert(pts.end(), brk.begin(), brk.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<double> fine{pts.front()};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double w = pts[i + 1] - pts[i];
      const auto m = static_cast<std::size_t>(std::ceil(w * 2 * L));
      for (std::size_t j = 1; j < m; ++j) fine.push_back(pts[i] + w * j / m);
      fine.push_back(pts[i + 1]);
    }
    r.lambdas.push_back(L);
    r.ladder.push_back(integrate_adaptive(g, fine, 1e-12).value);
  }
  std::vector<double> h;
  for (double L : r.lambdas) h.push_back(1 / L);
  const auto ex = neville_to_zero(h, r.ladder);
  r.value = ex.value;
  r.err_estimate = ex.err_estimate;
  if (ex.err_estimate > tol) throw LadderError("not a Dirichlet point at this resolution", ex.value);
  return r;
}

// sup over y in [2, Y] of the partial integrals int_2^Y log(y) |f~(y)| dy,
// for Y on a doubling ladder; converged when the increments shrink.
struct LogTransformBound {
  std::vector<double> Y;
  std::vector<double> partials;
  bool converged = false;
};

inline LogTransformBound log_weighted_transform_bound(const ParityFunction& f, double Ymax = 64) {
  LogTransformBound b;
  auto g = [&](double y) { return std::log(y) * std::abs(cosine_transform(f, y, 1e-12)); };
  double acc = 0.0, lo = 2.0;
  for (double Y = 8; Y <= Ymax; Y *= 2) {
    acc += integrate_adaptive(g, detail::merge_panels(lo, Y, nullptr, 0.5), 1e-9).value;
    b.Y.push_back(Y);
    b.partials.push_back(acc);
    lo = Y;
  }
  const std::size_t n = b.partials.size();
  b.converged = n >= 3 && std::abs(b.partials[n - 1] - b.partials[n - 2]) <=
                              0.5 * std::abs(b.partials[n - 2] - b.partials[n - 3]) + 1e-10;
  return b;
}

// int_0^L 2 cos(2 pi xi x) F(x) dx against sum f(xi/m)/m - int f(u)/u du.
inline std::vector<IdentityReport> pointwise_copoisson(const ParityFunction& f, const std::vector<double>& xis,
                                                       double lambda = 200, double tol = 1e-3,
                                                       bool check_hypothesis = true) {
  if (check_hypothesis) {
    const auto b = log_weighted_transform_bound(f);
    if (!b.converged) throw std::invalid_argument("hypothesis: log-weighted transform integral not convergent");
  }
  std::vector<IdentityReport> out;
  for (double xi : xis) {
    if (xi < 0) throw std::invalid_argument("pointwise_copoisson: xi must be >= 0");
    const double lhs = truncated_transform(f, xi, lambda);
    const auto k = eval_K_detailed(f, xi);
    auto p = detail::fparams(f);
    p["xi"] = xi;
    p["lambda"] = lambda;
    p["tail_bound"] = k.tail_bound;
    out.push_back(make_report("pointwise_copoisson", p, lhs, k.value, tol));
  }
  return out;
}

// sum_n phi(n/x)/|x| = sum_m psi(m x) over Z.
inline std::vector<IdentityReport> poisson_as_check(const ParityFunction& phi, const ParityFunction& psi,
                                                    const std::vector<double>& xs, double tol = 1e-10) {
  if (phi.parity() != Parity::even) throw std::invalid_argument("poisson_as_check: phi must be even");
  require_transform_pair(phi, psi);
  std::vector<IdentityReport> out;
  SumOptions opt;
  opt.tail_target = 1e-14;
  for (double x : xs) {
    if (!(x > 0)) throw std::invalid_argument("poisson_as_check: x must be > 0");
    const auto a = detail::forward_sum(phi, x, true, opt, std::nullopt);
    const auto b = detail::forward_sum(psi, x, false, opt, std::nullopt);
    const double lhs = phi(0.0) / x + 2 * a.value;
    const double rhs = psi(0.0) + 2 * b.value;
    nlohmann::ordered_json p;
    p["phi"] = phi.name();
    p["psi"] = psi.name();
    p["x"] = x;
    p["tail_bound"] = 2 * (a.tail_bound + b.tail_bound);
    out.push_back(make_report("poisson_as", p, lhs, rhs, tol));
  }
  return out;
}

// Duffin: sum_k (-1)^k f(x/(k+1/2))/(k+1/2) has sine transform
// sum_k (-1)^k f((2k+1)/(2y))/y, for odd f supported in [b,B], b > 0.
inline ParityFunction duffin_series(const ParityFunction& f) {
  if (f.parity() != Parity::odd) throw std::invalid_argument("duffin: f must be odd");
  if (!f.support() || !(f.support()->lo > 0)) throw std::invalid_argument("duffin: f must be supported away from 0");
  const double b = f.support()->lo, B = f.support()->hi;
  FunctionSpec s;
  s.name = "duffin(" + f.name() + ")";
  s.parity = Parity::odd;
  s.eval = [f, b, B](double x) {
    // k + 1/2 in [x/B, x/b]
    const double klo = std::max(0.0, std::ceil(x / B - 0.5) - 1), khi = std::floor(x / b - 0.5) + 1;
    double sum = 0.0;
    for (double k = khi; k >= klo; k -= 1) {
      const double h = k + 0.5;
      const double t = f.half_line(x / h) / h;
      sum += (static_cast<long long>(k) % 2 == 0) ? t : -t;
    }
    return sum;
  };
  s.smoothness = f.smoothness();
  s.is_l1 = s.is_l2 = true;
  return ParityFunction(std::move(s));
}

inline double duffin_rhs(const ParityFunction& f, double y) {
  const double b = f.support()->lo, B = f.support()->hi;
  if (y == 0) return 0.0;
  const double ay = std::abs(y);
  const double klo = std::max(0.0, std::ceil(b * ay - 0.5) - 1), khi = std::floor(B * ay - 0.5) + 1;
  double sum = 0.0;
  for (double k = klo; k <= khi; k += 1) {
    const double t = f.half_line((2 * k + 1) / (2 * ay));
    sum += (static_cast<long long>(k) % 2 == 0) ? t : -t;
  }
  return (y < 0 ? -sum : sum) / ay;
}

inline std::vector<IdentityReport> duffin_pair(const ParityFunction& f, const std::vector<double>& ys,
                                               double tol = 1e-6) {
  const auto L = duffin_series(f);
  std::vector<IdentityReport> out;
  for (double y : ys) {
    const double lhs = sine_transform(L, y, tol / 20);
    nlohmann::ordered_json p = detail::fparams(f);
    p["y"] = y;
    out.push_back(make_report("duffin_pair", p, lhs, duffin_rhs(f, y), tol));
  }
  return out;
}

// Kahane pair: phi(x) = g~(x) sum_n f(x+n) and psi(y) = sum_m f~(m) g(y-m),
// for even f, g supported in [-b, b] with b < 1/2.
struct KahanePair {
  ParityFunction f, g;
  double b;
  double phi(double x) const {
    double periodic = 0.0;
    for (double n = std::ceil(-x - b); n <= std::floor(-x + b); n += 1) periodic += f(x + n);
    if (periodic == 0.0) return 0.0;
    return cosine_transform(g, x, 1e-13) * periodic;
  }
  double psi(double y) const {
    double s = 0.0;
    for (double m = std::ceil(y - b); m <= std::floor(y + b); m += 1) {
      const double gv = g(y - m);
      if (gv != 0.0) s += cosine_transform(f, m, 1e-13) * gv;
    }
    return s;
  }
  // Shifted pair vanishing on (-a, a), a = 1/2 - b.
  cplx phi1(double x) const { return std::polar(1.0, std::numbers::pi * x) * phi(x - 0.5); }
  cplx psi1(double y) const { return cplx(0, 1) * std::polar(1.0, std::numbers::pi * y) * psi(y + 0.5); }
};

inline KahanePair make_kahane_pair(const ParityFunction& f, const ParityFunction& g) {
  if (f.parity() != Parity::even || g.parity() != Parity::even) throw std::invalid_argument("kahane: f, g must be even");
  if (!f.support() || !g.support() || f.support()->lo != 0.0 || g.support()->lo != 0.0)
    throw std::invalid_argument("kahane: f, g must be supported in [-b, b]");
  const double b = std::max(f.support()->hi, g.support()->hi);
  if (!(b < 0.5)) throw std::invalid_argument("kahane: need b < 1/2");
  return {f, g, b};
}

inline std::vector<IdentityReport> kahane_pair(const ParityFunction& f, const ParityFunction& g,
                                               const std::vector<double>& xs, const std::vector<double>& ys,
                                               double tol = 1e-8) {
  const auto K = make_kahane_pair(f, g);
  std::vector<IdentityReport> out;
  const double a = 0.5 - K.b;
  double phi_max = 0.0, psi_max = 0.0;
  for (double x : xs) {
    if (std::abs(x) >= a) throw std::invalid_argument("kahane: support sample outside (-a, a)");
    phi_max = std::max(phi_max, std::abs(K.phi1(x)));
    psi_max = std::max(psi_max, std::abs(K.psi1(x)));
  }
  nlohmann::ordered_json p;
  p["f"] = f.name();
  p["g"] = g.name();
  p["a"] = a;
  p["samples"] = xs.size();
  out.push_back(make_report("kahane_support_phi", p, phi_max, 0.0, 0.0));
  out.push_back(make_report("kahane_support_psi", p, psi_max, 0.0, 0.0));
  const auto phi = make_function("kahane_phi", Parity::even, [K](double x) { return K.phi(x); });
  for (double y : ys) {
    nlohmann::ordered_json q;
    q["f"] = f.name();
    q["g"] = g.name();
    q["y"] = y;
    out.push_back(make_report("kahane_transform", q, cosine_transform(phi, y, tol / 20), K.psi(y), tol));
  }
  return out;
}

// window averages (1/L) int_L^{2L} |A| with A = F_phi.
inline std::vector<IdentityReport> riemann_sum_decay(const ParityFunction& phi, const std::vector<double>& lambdas,
                                                     const std::optional<ParityFunction>& psi = std::nullopt,
                                                     double tol = 1e-8) {
  if (psi) require_transform_pair(phi, *psi);
  std::vector<IdentityReport> out;
  std::vector<double> avgs;
  auto brk = detail::sum_breaks(SumKind::F, phi);
  const double phi0 = phi(0.0);
  for (double L : lambdas) {
    auto absA = [&](double x) { return std::abs(eval_F(phi, x)); };
    const double lhs = integrate_adaptive(absA, detail::merge_panels(L, 2 * L, brk, 0.25), 1e-13).value / L;
    double rhs = lhs;
    double corrected = 0.0;
    if (psi) {
      SumOptions opt;
      auto absB = [&](double x) {
        const auto b = detail::forward_sum(*psi, x, false, opt, std::nullopt);
        return std::abs(b.value - 0.5 * phi0 / x);
      };
      rhs = integrate_adaptive(absB, detail::merge_panels(L, 2 * L, nullptr, 0.25), 1e-13).value / L;
      auto absC = [&](double x) { return std::abs(eval_F(phi, x) + 0.5 * phi0 / x); };
      corrected = integrate_adaptive(absC, detail::merge_panels(L, 2 * L, brk, 0.25), 1e-13).value;
    }
    nlohmann::ordered_json p;
    p["phi"] = phi.name();
    p["lambda"] = L;
    if (psi) p["int_abs_A_plus_half_phi0_over_x"] = corrected;
    out.push_back(make_report("riemann_sum_window", p, lhs, rhs, tol));
    avgs.push_back(lhs);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < avgs.size(); ++i) decreasing = decreasing && avgs[i] < avgs[i - 1];
  nlohmann::ordered_json p;
  p["phi"] = phi.name();
  p["lambdas"] = lambdas;
  p["averages"] = avgs;
  auto r = make_report("riemann_sum_decay", p, avgs.empty() ? 0.0 : avgs.back(), 0.0,
                       avgs.empty() ? 0.0 : avgs.front());
  r.pass = decreasing;
  out.push_back(r);
  return out;
}

}  // namespace copoisson
