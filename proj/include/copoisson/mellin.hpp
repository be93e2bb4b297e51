#pragma once

// Mellin transforms on vertical lines and the zeta identities: Muntz,
// co-Muntz, functional equation, principal-value pairing, Fourier transform
// of zeta on Re s = sigma, L2 Muntz distribution, fractional-part pair, polar
// part of the completed zeta.

#include <copoisson/copoisson.hpp>
#include <copoisson/funcspace.hpp>
#include <copoisson/quad.hpp>
#include <copoisson/report.hpp>
#include <copoisson/special.hpp>
#include <copoisson/sums.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace copoisson {

enum class MellinSide { left, right };  // left: x^(s-1), right: x^(-s)

inline const char* to_string(MellinSide s) { return s == MellinSide::left ? "left" : "right"; }

struct VerticalSlice {
  double sigma = 0.0;
  std::vector<double> tau;
  std::vector<cplx> values;
  std::vector<double> err;
  MellinSide side = MellinSide::left;
};

namespace detail {

// Exponent p with integrand g(x) x^(p-1).
inline cplx mellin_exponent(cplx s, MellinSide side) { return side == MellinSide::left ? s : 1.0 - s; }

// Panels in u = log x over [ulo, uhi], honoring breakpoints of the x-integrand,
// the phase period of x^(i tau) and an optional period in x.
inline std::vector<double> log_panels(double ulo, double uhi, double tau, double x_period,
                                      const std::vector<double>& xbreaks) {
  std::vector<double> out{ulo};
  std::vector<double> br;
  for (double b : xbreaks)
    if (b > 0) {
      const double u = std::log(b);
      if (u > ulo && u < uhi) br.push_back(u);
    }
  std::sort(br.begin(), br.end());
  std::size_t bi = 0;
  double u = ulo;
  const double du_tau = tau != 0 ? std::min(1.0, std::numbers::pi / std::abs(tau)) : 1.0;
  while (u < uhi) {
    double du = du_tau;
    if (x_period > 0) du = std::min(du, 0.5 * x_period / std::exp(u));
    double next = std::min(uhi, u + std::max(du, 1e-9));
    while (bi < br.size() && br[bi] <= u) ++bi;
    if (bi < br.size() && br[bi] < next) next = br[bi];
    out.push_back(next);
    u = next;
  }
  return out;
}

// int over x in [e^ulo, e^uhi] of g(x) x^(p-1) dx in the log variable.
template <class G>
QuadResult<cplx> log_integral(const G& g, cplx p, double ulo, double uhi, double x_period,
                              const std::vector<double>& xbreaks, double tol) {
  auto h = [&](double u) -> cplx {
    const double x = std::exp(u);
    const double v = g(x);
    if (v == 0.0) return 0.0;
    return v * std::exp(p * u);
  };
  return integrate_adaptive(h, log_panels(ulo, uhi, p.imag(), x_period, xbreaks), tol);
}

// Shells in u from u0 downward (dir = -1) or upward (dir = +1) until three
// consecutive shells are below tol/8.
template <class G>
QuadResult<cplx> log_shells(const G& g, cplx p, double u0, int dir, double x_period, const BreakFn& brk, double tol,
                            double ulimit) {
  QuadResult<cplx> total{0.0, 0.0, 0};
  int small = 0;
  double u = u0;
  for (int k = 0; k < 200; ++k) {
    double a = dir < 0 ? u - 1 : u, b = dir < 0 ? u : u + 1;
    if (dir < 0 && a < ulimit) a = ulimit;
    if (dir > 0 && b > ulimit) b = ulimit;
    if (!(b > a)) break;
    std::vector<double> xb;
    if (brk) xb = brk(std::exp(a), std::exp(b));
    const auto r = log_integral(g, p, a, b, x_period, xb, tol / 16);
    total.value += r.value;
    total.err_estimate += r.err_estimate;
    total.evaluations += r.evaluations;
    small = std::abs(r.value) < tol / 8 ? small + 1 : 0;
    if (small >= 3) return total;
    u = dir < 0 ? a : b;
  }
  total.err_estimate = INFINITY;
  return total;
}

}  // namespace detail

// Mellin transform at one s: left int f x^(s-1) dx or right int f x^(-s) dx.
inline QuadResult<cplx> mellin_value(const ParityFunction& f, cplx s, MellinSide side, double tol = 1e-12,
                                     double x_period = 0.0) {
  const cplx p = detail::mellin_exponent(s, side);
  auto g = [&](double x) { return f.half_line(x); };
  auto brk = detail::own_breaks(f);
  if (f.support() && f.support()->lo > 0) {
    const auto& sp = *f.support();
    return detail::log_integral(g, p, std::log(sp.lo), std::log(sp.hi), x_period, f.breakpoints(sp.lo, sp.hi), tol);
  }
  const double top = f.support() ? std::log(f.support()->hi) : INFINITY;
  const double mid = std::min(0.0, top);
  auto down = detail::log_shells(g, p, mid, -1, x_period, brk, tol / 2, -700);
  if (!std::isfinite(top) || top > mid) {
    auto up = detail::log_shells(g, p, mid, +1, x_period, brk, tol / 2, std::isfinite(top) ? top : 700);
    down.value += up.value;
    down.err_estimate += up.err_estimate;
    down.evaluations += up.evaluations;
  }
  return down;
}

inline VerticalSlice mellin_line(const ParityFunction& f, double sigma, const std::vector<double>& tau,
                                 MellinSide side, double tol = 1e-12) {
  VerticalSlice v;
  v.sigma = sigma;
  v.tau = tau;
  v.side = side;
  for (double t : tau) {
    const auto r = mellin_value(f, cplx(sigma, t), side, tol);
    v.values.push_back(r.value);
    v.err.push_back(r.err_estimate);
  }
  return v;
}

// max |M(-tau) - conj M(tau)| over pairs of grid points symmetric about 0.
inline double conjugate_symmetry_defect(const VerticalSlice& v) {
  double d = 0.0;
  for (std::size_t i = 0; i < v.tau.size(); ++i)
    for (std::size_t j = 0; j < v.tau.size(); ++j)
      if (v.tau[i] == -v.tau[j]) d = std::max(d, std::abs(v.values[i] - std::conj(v.values[j])));
  return d;
}

// int_0^inf A_f(x) x^(s-1) dx for 0 < Re s < 1.
inline QuadResult<cplx> muntz_lhs(const ParityFunction& f, cplx s, double tol = 1e-11) {
  const double I = f.integral();
  const double half0 = 0.5 * f(0.0);
  // Beyond X1 the sum vanishes (compact) or is below rounding (majorant).
  double X1 = 0.0;
  if (f.support()) {
    X1 = f.support()->hi;
  } else if (f.tail_majorant()) {
    const auto& m = *f.tail_majorant();
    X1 = 1.0;
    while (m.k(X1) + m.tail(X1) / X1 > 1e-18) X1 *= 1.25;
  } else {
    throw DivergenceError(f.name() + ": no tail information for the Muntz integral");
  }
  // Tail: int_X1^inf -I x^(s-2) dx = -I X1^(s-1)/(1-s).
  const cplx tail = -I * std::exp((s - 1.0) * std::log(X1)) / (1.0 - s);
  // On (0, X1]: A + f(0)/2, with -f(0)/2 integrated exactly.
  auto g = [&](double x) { return eval_A(f, x) + half0; };
  const double xmin_u = std::log(1e-7);
  detail::BreakFn brk;
  if (f.smoothness() != Smoothness::cinf) brk = detail::sum_breaks(SumKind::A, f);
  auto body = detail::log_shells(g, s, std::log(X1), -1, 0.0, brk, tol, xmin_u);
  const cplx head = -half0 * std::exp(s * std::log(X1)) / s;
  return {body.value + tail + head, body.err_estimate, body.evaluations};
}

// int_0^inf K(x) x^(-s) dx for 0 < Re s < 1.
inline QuadResult<cplx> comuntz_lhs(const ParityFunction& f, cplx s, double tol = 1e-11) {
  const double J = f.inverted_integral();
  const double x0 = (f.support() && f.support()->lo > 0) ? f.support()->lo : 1.0;
  // On (0, x0]: K + J, plus int_0^x0 -J x^(-s) dx = -J x0^(1-s)/(1-s).
  const cplx head = -J * std::exp((1.0 - s) * std::log(x0)) / (1.0 - s);
  detail::BreakFn brk;
  if (f.smoothness() != Smoothness::cinf) brk = detail::sum_breaks(SumKind::K, f);
  QuadResult<cplx> low{0.0, 0.0, 0};
  if (!(f.support() && f.support()->lo > 0)) {
    auto g = [&](double x) { return eval_K(f, x) + J; };
    low = detail::log_shells(g, 1.0 - s, std::log(x0), -1, 0.0, brk, tol, std::log(1e-7));
  }
  auto gk = [&](double x) { return eval_K(f, x); };
  auto high = detail::log_shells(gk, 1.0 - s, std::log(x0), +1, 0.0, brk, tol, std::log(1e7));
  return {head + low.value + high.value, low.err_estimate + high.err_estimate, low.evaluations + high.evaluations};
}

namespace detail {

inline nlohmann::ordered_json s_params(const ParityFunction& f, cplx s) {
  nlohmann::ordered_json p;
  p["f"] = f.name();
  p["sigma"] = s.real();
  p["tau"] = s.imag();
  return p;
}

}  // namespace detail

// int A_f x^(s-1) dx = zeta(s) int f x^(s-1) dx on 0 < Re s < 1.
inline std::vector<IdentityReport> muntz_identity(const ParityFunction& f, double sigma, const std::vector<double>& tau,
                                                  double tol = 1e-6) {
  if (!(sigma > 0 && sigma < 1)) throw std::invalid_argument("muntz_identity: need 0 < sigma < 1");
  std::vector<IdentityReport> out;
  for (double t : tau) {
    const cplx s(sigma, t);
    const auto lhs = muntz_lhs(f, s);
    const cplx rhs = zeta(s).value * mellin_value(f, s, MellinSide::left).value;
    auto p = detail::s_params(f, s);
    p["quad_err"] = lhs.err_estimate;
    out.push_back(make_report("muntz", p, lhs.value, rhs, tol));
  }
  return out;
}

// Co-Muntz: int K x^(-s) dx = zeta(s) int f x^(-s) dx on 0 < Re s < 1.
inline std::vector<IdentityReport> comuntz_identity(const ParityFunction& f, double sigma,
                                                    const std::vector<double>& tau, double tol = 1e-6) {
  if (!(sigma > 0 && sigma < 1)) throw std::invalid_argument("comuntz_identity: need 0 < sigma < 1");
  std::vector<IdentityReport> out;
  for (double t : tau) {
    const cplx s(sigma, t);
    const auto lhs = comuntz_lhs(f, s);
    const cplx rhs = zeta(s).value * mellin_value(f, s, MellinSide::right).value;
    auto p = detail::s_params(f, s);
    p["quad_err"] = lhs.err_estimate;
    out.push_back(make_report("comuntz", p, lhs.value, rhs, tol));
  }
  return out;
}

inline cplx completion_factor(cplx s) {
  return std::exp(-0.5 * s * std::log(std::numbers::pi) + log_gamma(0.5 * s));
}

// Cosine transform as a ParityFunction evaluated by quadrature.
inline ParityFunction numeric_transform(const ParityFunction& f, double tol = 1e-12) {
  FunctionSpec s;
  s.name = "tilde(" + f.name() + ")";
  s.parity = f.parity();
  s.eval = [f, tol](double y) { return transform(f, y, tol); };
  s.is_l1 = s.is_l2 = true;
  return ParityFunction(std::move(s));
}

// Height beyond which |ft| stays below floor on three consecutive unit windows.
inline double transform_cutoff(const ParityFunction& ft, double floor, double cap = 4000) {
  int small = 0;
  double y = 1.0;
  for (; y < cap; y += 1.0) {
    double env = 0.0;
    for (int k = 0; k < 8; ++k) env = std::max(env, std::abs(ft(y + k / 8.0)));
    small = env < floor ? small + 1 : 0;
    if (small >= 3) break;
  }
  return y;
}

// Right Mellin transform of the cosine transform of f at s.
inline cplx mellin_of_transform(const ParityFunction& f, cplx s, double tol = 1e-11) {
  const auto ft = numeric_transform(f);
  if (!f.support()) return mellin_value(ft, s, MellinSide::right, tol).value;
  const cplx p = 1.0 - s;
  auto g = [&](double y) { return ft(y); };
  const double period = 1.0 / f.support()->hi;
  const double Y = transform_cutoff(ft, 1e-14 * std::max(1.0, std::abs(ft(0.0))));
  auto low = detail::log_shells(g, p, 0.0, -1, 0.0, nullptr, tol, -700);
  auto high = detail::log_integral(g, p, 0.0, std::log(Y), period, {}, tol);
  return low.value + high.value;
}

// Functional equation on Re s = 1/2:
// pi^(-s/2) G(s/2) M(f~)(s) = pi^(-(1-s)/2) G((1-s)/2) M(f)(1-s); relative defect.
inline std::vector<IdentityReport> functional_eq_defect(const ParityFunction& f, const std::vector<double>& tau,
                                                        double tol = 1e-8) {
  if (f.parity() != Parity::even) throw std::invalid_argument("functional_eq_defect: f must be even");
  std::vector<IdentityReport> out;
  for (double t : tau) {
    const cplx s(0.5, t);
    const cplx lhs = completion_factor(s) * mellin_of_transform(f, s);
    const cplx rhs = completion_factor(1.0 - s) * mellin_value(f, 1.0 - s, MellinSide::right).value;
    auto p = detail::s_params(f, s);
    p["relative"] = true;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    out.push_back(make_report("functional_eq", p, lhs, rhs, tol * std::max(scale, 1e-300)));
  }
  return out;
}

// A test function on the line with its Fourier transform
// Theta(tau) = int theta(u) e^{-i tau u} du.
struct LineTest {
  std::string name;
  std::function<double(double)> theta;
  std::function<cplx(double)> Theta;
  double center = 0.0;
  double half_width = 8.0;  // theta negligible outside center +- half_width
};

// theta(u) = exp(-pi (u - c)^2).
inline LineTest gaussian_test(double c = 0.0) {
  constexpr double pi = std::numbers::pi;
  LineTest t;
  t.name = "gaussian_shift:" + format_double(c);
  t.theta = [c](double u) { return std::exp(-pi * (u - c) * (u - c)); };
  t.Theta = [c](double tau) { return std::polar(std::exp(-tau * tau / (4 * pi)), -tau * c); };
  t.center = c;
  t.half_width = 7.0;
  return t;
}

// Fills Theta by quadrature when only theta is known.
inline LineTest with_numeric_transform(LineTest t) {
  const auto th = t.theta;
  const double lo = t.center - t.half_width, hi = t.center + t.half_width;
  t.Theta = [th, lo, hi](double tau) {
    auto g = [&](double u) { return th(u) * std::polar(1.0, -tau * u); };
    const double len = tau != 0 ? std::min(0.5, std::numbers::pi / std::abs(tau)) : 0.5;
    std::vector<double> pts;
    for (double u = lo; u < hi; u += len) pts.push_back(u);
    pts.push_back(hi);
    return integrate_adaptive(g, pts, 1e-13).value;
  };
  return t;
}

inline LineTest zero_test() {
  LineTest t;
  t.name = "zero";
  t.theta = [](double) { return 0.0; };
  t.Theta = [](double) { return cplx(0.0); };
  return t;
}

namespace detail {

// Height beyond which |Theta| is negligible.
inline double theta_cutoff(const LineTest& t) {
  double T = 4.0;
  int small = 0;
  while (T < 400) {
    small = std::abs(t.Theta(T)) < 1e-15 ? small + 1 : 0;
    if (small >= 3) break;
    T += 2.0;
  }
  return T;
}

// sum_n n^(-sigma) theta(-log n) over n with -log n in the support window.
inline double dirac_side(const LineTest& t, double sigma) {
  double s = 0.0;
  const double umax = -(t.center - t.half_width);
  if (umax < 0) return 0.0;
  const double nmax = std::min(std::exp(umax), 1e8);
  for (double n = 1; n <= nmax; n += 1) s += std::pow(n, -sigma) * t.theta(-std::log(n));
  return s;
}

inline double theta_integral(const LineTest& t, const std::function<double(double)>& w) {
  auto g = [&](double u) { return t.theta(u) * w(u); };
  std::vector<double> pts;
  for (double u = t.center - t.half_width; u < t.center + t.half_width; u += 0.5) pts.push_back(u);
  pts.push_back(t.center + t.half_width);
  return integrate_adaptive(g, pts, 1e-13).value;
}

}  // namespace detail

// lim_{d->0} int_{|tau|>d} zeta(1+i tau) Theta(tau) dtau/2pi
// = sum (1/n) theta(-log n) - (1/2) int theta.
inline IdentityReport vp_zeta_pairing(const LineTest& t, const std::vector<double>& deltas = {0.2, 0.1, 0.05, 0.025},
                                      double tol = 1e-5) {
  if (deltas.size() < 2) throw std::invalid_argument("vp_zeta_pairing: ladder needs two values");
  const double T = detail::theta_cutoff(t);
  auto g = [&](double tau) {
    return 2 * (zeta(cplx(1.0, tau)).value * t.Theta(tau)).real() / (2 * std::numbers::pi);
  };
  // int_delta^T for each delta, sharing the part above the largest delta.
  const double dmax = *std::max_element(deltas.begin(), deltas.end());
  const double upper = integrate_adaptive(g, detail::merge_panels(dmax, T, nullptr, 0.5), 1e-11).value;
  std::vector<double> vals;
  for (double d : deltas) vals.push_back(upper + integrate_adaptive(g, d, dmax, 1e-12).value);
  const auto ex = neville_to_zero(deltas, vals);
  const double rhs = detail::dirac_side(t, 1.0) - 0.5 * t.Theta(0.0).real();
  nlohmann::ordered_json p;
  p["theta"] = t.name;
  p["deltas"] = deltas;
  p["ladder"] = vals;
  p["extrapolation_err"] = ex.err_estimate;
  return make_report("vp_zeta_pairing", p, ex.value, rhs, tol);
}

// int zeta(sigma+i tau) Theta(tau) dtau/2pi
// = sum n^(-sigma) theta(-log n) - int e^((sigma-1)u) theta(u) du, 0 < sigma < 1.
inline IdentityReport fourier_zeta_sigma(double sigma, const LineTest& t, double tol = 1e-8) {
  if (!(sigma > 0 && sigma < 1)) throw std::invalid_argument("fourier_zeta_sigma: need 0 < sigma < 1");
  const double T = detail::theta_cutoff(t);
  auto g = [&](double tau) {
    return 2 * (zeta(cplx(sigma, tau)).value * t.Theta(tau)).real() / (2 * std::numbers::pi);
  };
  const double lhs = integrate_adaptive(g, detail::merge_panels(0.0, T, nullptr, 0.5), 1e-11).value;
  const double rhs = detail::dirac_side(t, sigma) -
                     detail::theta_integral(t, [sigma](double u) { return std::exp((sigma - 1) * u); });
  nlohmann::ordered_json p;
  p["theta"] = t.name;
  p["sigma"] = sigma;
  return make_report("fourier_zeta_sigma", p, lhs, rhs, tol);
}

namespace detail {

// Upper end of the effective support of f.
inline double effective_end(const ParityFunction& f) {
  if (f.support()) return f.support()->hi;
  if (f.tail_majorant()) {
    double x = 1.0;
    while (f.tail_majorant()->k(x) > 1e-18) x *= 1.1;
    return x;
  }
  return 64.0;
}

inline void require_test_function(const ParityFunction& phi) {
  if (!phi.support() || !(phi.support()->lo > 0))
    throw std::invalid_argument("test function must be compactly supported away from 0");
}

}  // namespace detail

// direct form: <D_f, phi> = int f(x) K_phi(x) dx.
inline double pairing_direct(const ParityFunction& f, const ParityFunction& phi, double tol = 1e-12) {
  detail::require_test_function(phi);
  auto g = [&](double x) { return f.half_line(x) * eval_K(phi, x); };
  auto brk = detail::join(detail::own_breaks(f), detail::sum_breaks(SumKind::K, phi));
  if (f.support() && f.support()->lo > 0)
    return integrate_adaptive(g, detail::merge_panels(f.support()->lo, f.support()->hi, brk, 0.25), tol).value;
  return detail::integrate_shells(g, brk, tol, f.support() ? f.support()->hi : INFINITY, 0.25);
}

// G_f(x) = int_0^inf f(x u) {u}/u du = int_0^inf f(v) {v/x}/v dv.
inline double G_fracpart(const ParityFunction& f, double x, double tol = 1e-13) {
  const double lo = (f.support() && f.support()->lo > 0) ? f.support()->lo : 0.0;
  const double hi = detail::effective_end(f);
  auto g = [&](double v) {
    const double q = v / x;
    return f.half_line(v) * (q - std::floor(q)) / v;
  };
  std::vector<double> pts{lo};
  for (double k = std::floor(lo / x) + 1; k * x < hi; k += 1) pts.push_back(k * x);
  for (double b : f.breakpoints(lo, hi)) pts.push_back(b);
  pts.push_back(hi);
  return integrate_adaptive(g, pts, tol).value;
}

// derivative form: <D_f, phi> = <x d/dx G_f, phi> = -int G_f(x) (x phi(x))' dx.
inline double pairing_derivative(const ParityFunction& f, const ParityFunction& phi, double tol = 1e-11) {
  detail::require_test_function(phi);
  auto g = [&](double x) { return -G_fracpart(f, x) * (phi.half_line(x) + x * phi.derivative(x)); };
  return integrate_adaptive(g, phi.panels(phi.support()->lo, phi.support()->hi, 0.05), tol).value;
}

inline IdentityReport l2_muntz_D(const ParityFunction& f, const ParityFunction& phi, double tol = 1e-6) {
  nlohmann::ordered_json p;
  p["f"] = f.name();
  p["phi"] = phi.name();
  return make_report("l2_muntz_D", p, pairing_direct(f, phi), pairing_derivative(f, phi), tol);
}

// <D_f, phi(x)> = <D_{f~}, phi(1/x)/x>.
inline IdentityReport l2_muntz_symmetry(const ParityFunction& f, const ParityFunction& phi, double tol = 1e-5) {
  const auto ft = numeric_transform(f);
  nlohmann::ordered_json p;
  p["f"] = f.name();
  p["phi"] = phi.name();
  return make_report("l2_muntz_symmetry", p, pairing_direct(f, phi), pairing_direct(ft, invert(phi), 1e-10), tol);
}

// int_v^inf {u}/u^2 du by unit panels up to M plus the asymptotic tail
// 1/(2M) - 1/(12 M^2).
inline double fracpart_tail_integral(double v, double M = 20000) {
  auto g = [](double u) { return (u - std::floor(u)) / (u * u); };
  std::vector<double> pts{v};
  for (double k = std::floor(v) + 1; k <= M; k += 1) pts.push_back(k);
  return integrate_adaptive(g, pts, 1e-12).value + 1 / (2 * M) - 1 / (12 * M * M);
}

// the cosine transform of {u}/u is -{v}/v + int_v^inf {u}/u^2 du.
inline std::vector<IdentityReport> frac_part_pair(const std::vector<double>& vs, double tol = 1e-3,
                                                  const std::vector<double>& ladder = default_abel_ladder()) {
  const auto f = builtin_function("fracpart_over_x");
  std::vector<IdentityReport> out;
  for (double v : vs) {
    if (!(v > 0) || v == std::floor(v)) throw std::invalid_argument("frac_part_pair: v must be positive, non-integer");
    const auto a = abel_transform(f, v, ladder);
    const double rhs = -(v - std::floor(v)) / v + fracpart_tail_integral(v);
    nlohmann::ordered_json p;
    p["v"] = v;
    p["abel_err"] = a.err_estimate;
    out.push_back(make_report("frac_part_pair", p, a.value, rhs, tol));
  }
  return out;
}

// g(s) = pi^(-s/2) G(s/2) zeta(s) + 1/s - 1/(s-1), regular at 0 and 1.
inline cplx completed_zeta_regular_part(cplx s) {
  return completion_factor(s) * zeta(s).value + 1.0 / s - 1.0 / (s - 1.0);
}

inline cplx circle_mean(const std::function<cplx(cplx)>& g, cplx c, double r, int m, double* maxmod) {
  cplx sum = 0.0;
  for (int k = 0; k < m; ++k) {
    const cplx z = g(c + std::polar(r, 2 * std::numbers::pi * (k + 0.5) / m));
    if (maxmod) *maxmod = std::max(*maxmod, std::abs(z));
    sum += z;
  }
  return sum / static_cast<double>(m);
}

// Around s = 0 and s = 1: the circle means of g at radii 0.1 and 0.05 agree
// (mean-value property of a function without poles inside), and g stays
// bounded. Around s = 1/2: the mean matches g(1/2).
inline std::vector<IdentityReport> zeta_polar_part_check(double tol = 1e-9) {
  std::vector<IdentityReport> out;
  std::function<cplx(cplx)> g = completed_zeta_regular_part;
  for (double c : {0.0, 1.0}) {
    double m1 = 0.0, m2 = 0.0;
    const cplx a = circle_mean(g, c, 0.1, 64, &m1);
    const cplx b = circle_mean(g, c, 0.05, 64, &m2);
    nlohmann::ordered_json p;
    p["center"] = c;
    p["radii"] = {0.1, 0.05};
    p["max_modulus"] = {m1, m2};
    out.push_back(make_report("zeta_polar_part", p, a, b, tol));
  }
  double m = 0.0;
  const cplx a = circle_mean(g, 0.5, 0.1, 64, &m);
  nlohmann::ordered_json p;
  p["center"] = 0.5;
  p["radii"] = {0.1};
  p["max_modulus"] = {m};
  out.push_back(make_report("zeta_polar_part", p, a, g(0.5), tol));
  return out;
}

}  // namespace copoisson
