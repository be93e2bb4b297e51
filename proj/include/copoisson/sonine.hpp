#pragma once

// The integral equation phi(x) +- int_0^a 2cos(2 pi x y) phi(y) dy = 2cos(2 pi a x),
// the entire functions calA_a, calB_a built from its solutions, and their
// zeros on the critical line.

#include <copoisson/integrate.hpp>
#include <copoisson/special.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace copoisson {

enum class SonineSign { plus, minus };

inline const char* to_string(SonineSign s) { return s == SonineSign::plus ? "plus" : "minus"; }

struct SonineSolution {
  double a = 0.0;
  SonineSign sign = SonineSign::plus;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> phi_values;
  double residual_inf = 0.0;
  double op_norm_estimate = 0.0;

  double sgn() const { return sign == SonineSign::plus ? 1.0 : -1.0; }
};

class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2cos(2 pi a x) -+ sum_j w_j 2cos(2 pi x y_j) phi_j: the Nystrom extension,
// defined for every real x and even.
inline double phi_extend(const SonineSolution& sol, double x) {
  constexpr double tp = 2 * std::numbers::pi;
  x = std::abs(x);
  double s = 0.0;
  if (sol.a * x <= sol.nodes.size() / 8.0) {
    for (std::size_t j = 0; j < sol.nodes.size(); ++j)
      s += sol.weights[j] * 2 * std::cos(tp * x * sol.nodes[j]) * sol.phi_values[j];
  } else {
    // The node rule no longer resolves cos(2 pi x y): integrate the extended
    // solution on panels shorter than a period.
    static const auto gl = gauss_legendre(16);
    const auto m = static_cast<std::size_t>(std::ceil(2 * sol.a * x));
    const double h = sol.a / m;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t k = 0; k < gl.x.size(); ++k) {
        const double y = h * (p + 0.5 * (gl.x[k] + 1));
        s += 0.5 * h * gl.w[k] * 2 * std::cos(tp * x * y) * phi_extend(sol, y);
      }
  }
  return 2 * std::cos(tp * sol.a * x) - sol.sgn() * s;
}

inline SonineSolution solve_phi(double a, SonineSign sign, std::size_t n_nodes = 64) {
  if (!(a > 0)) throw std::invalid_argument("solve_phi: a must be positive");
  if (n_nodes < 16) throw std::invalid_argument("solve_phi: need at least 16 nodes");
  constexpr double tp = 2 * std::numbers::pi;
  SonineSolution sol;
  sol.a = a;
  sol.sign = sign;
  const auto gl = gauss_legendre(n_nodes);
  const std::size_t n = n_nodes;
  for (std::size_t i = 0; i < n; ++i) {
    sol.nodes.push_back(0.5 * a * (gl.x[i] + 1));
    sol.weights.push_back(0.5 * a * gl.w[i]);
  }
  const double sg = sol.sgn();
  Eigen::MatrixXd M(n, n), S(n, n);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs(i) = 2 * std::cos(tp * a * sol.nodes[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double k = 2 * std::cos(tp * sol.nodes[i] * sol.nodes[j]);
      M(i, j) = (i == j ? 1.0 : 0.0) + sg * k * sol.weights[j];
      S(i, j) = std::sqrt(sol.weights[i]) * k * std::sqrt(sol.weights[j]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  sol.op_norm_estimate = es.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (!lu.isInvertible()) throw SingularSystemError("solve_phi: singular Nystrom system");
  const Eigen::VectorXd phi = lu.solve(rhs);
  sol.phi_values.assign(phi.data(), phi.data() + n);

  // Residual of the equation at 20 off-node points, with the integral taken
  // on a finer rule applied to the extended solution.
  const auto fine = gauss_legendre(2 * n_nodes + 7);
  std::vector<double> fz, fw, fphi;
  for (std::size_t k = 0; k < fine.x.size(); ++k) {
    fz.push_back(0.5 * a * (fine.x[k] + 1));
    fw.push_back(0.5 * a * fine.w[k]);
    fphi.push_back(phi_extend(sol, fz.back()));
  }
  double res = 0.0;
  for (int m = 0; m < 20; ++m) {
    const double x = a * (m + 0.37) / 20.0;
    double integral = 0.0;
    for (std::size_t k = 0; k < fz.size(); ++k) integral += fw[k] * 2 * std::cos(tp * x * fz[k]) * fphi[k];
    res = std::max(res, std::abs(phi_extend(sol, x) + sg * integral - 2 * std::cos(tp * a * x)));
  }
  sol.residual_inf = res;
  return sol;
}

namespace detail {

// int_0^a cos(2 pi z y) y^(-s) dy for Re s < 1: Taylor series on [0, e],
// Gauss-Legendre in log y on [e, a].
inline cplx cos_power_head(double z, double a, cplx s) {
  constexpr double tp = 2 * std::numbers::pi;
  const double e = std::min(a, 0.05 / std::max(z, 1e-300));
  cplx head = 0.0;
  double c = 1.0;  // (-1)^k (2 pi z)^(2k) / (2k)!
  for (int k = 0; k < 40; ++k) {
    const cplx term = c * std::exp((2.0 * k + 1.0 - s) * std::log(e)) / (2.0 * k + 1.0 - s);
    head += term;
    if (std::abs(term) < 1e-18 * std::abs(head)) break;
    c *= -(tp * z) * (tp * z) / ((2.0 * k + 1) * (2.0 * k + 2));
  }
  if (e >= a) return head;
  static const GaussLegendre gl = gauss_legendre(24);
  const double ulo = std::log(e), uhi = std::log(a);
  double u = ulo;
  cplx body = 0.0;
  while (u < uhi) {
    const double du = std::min({0.5, 0.2 / (z * std::exp(u)), uhi - u});
    for (std::size_t i = 0; i < gl.x.size(); ++i) {
      const double t = u + 0.5 * du * (gl.x[i] + 1);
      body += 0.5 * du * gl.w[i] * std::cos(tp * z * std::exp(t)) * std::exp((1.0 - s) * t);
    }
    u += du;
  }
  return head + body;
}

inline cplx cos_power_full(double z, cplx s) {
  constexpr double tp = 2 * std::numbers::pi;
  return gamma_complex(1.0 - s) * std::sin(std::numbers::pi * s / 2.0) * std::exp((s - 1.0) * std::log(tp * z));
}

}  // namespace detail

// int_0^a phi(z) z^(s-1) dz for the extended solution, term by term.
inline cplx phi_head_mellin(const SonineSolution& sol, cplx s) {
  cplx r = 2.0 * detail::cos_power_head(sol.a, sol.a, 1.0 - s);
  for (std::size_t j = 0; j < sol.nodes.size(); ++j)
    r -= sol.sgn() * sol.weights[j] * sol.phi_values[j] * 2.0 * detail::cos_power_head(sol.nodes[j], sol.a, 1.0 - s);
  return r;
}

// int_a^inf phi(y) y^(-s) dy, 0 < Re s < 1. With phi = 2cos(2 pi a y) -+ r(y) and
// r(y) = int_0^a 2cos(2 pi y z) phi(z) dz, the r part is
// int_0^a phi(z) [2 g z^(s-1) - 2 int_0^a cos(2 pi y z) y^(-s) dy] dz with
// g = G(1-s) sin(pi s/2) (2 pi)^(s-1); the singular factor z^(s-1) is integrated
// exactly against the extended solution.
inline cplx phi_tail_mellin(const SonineSolution& sol, cplx s) {
  if (!(s.real() > 0 && s.real() < 1)) throw std::domain_error("phi_tail_mellin: need 0 < Re s < 1");
  const double a = sol.a;
  const cplx cos_part = 2.0 * (detail::cos_power_full(a, s) - detail::cos_power_head(a, a, s));
  const cplx g = detail::cos_power_full(1.0, s);
  cplx smooth = 0.0;
  for (std::size_t j = 0; j < sol.nodes.size(); ++j)
    smooth += sol.weights[j] * sol.phi_values[j] * 2.0 * detail::cos_power_head(sol.nodes[j], a, s);
  const cplx r_part = 2.0 * g * phi_head_mellin(sol, s) - smooth;
  return cos_part - sol.sgn() * r_part;
}

// calA_a(s) = pi^(-s/2) G(s/2) (sqrt a/2) (a^(-s) + int_a^inf phi_a y^(-s) dy) for the
// plus solution; calB_a(s) = pi^(-s/2) G(s/2) (i sqrt a/2) (a^(-s) - int_a^inf phi_a^- y^(-s) dy)
// for the minus solution. Evaluated on the open strip 0 < Re s < 1.
class EntireMellin {
 public:
  explicit EntireMellin(SonineSolution sol) : sol_(std::move(sol)) {}

  const SonineSolution& solution() const { return sol_; }
  double a() const { return sol_.a; }

  cplx operator()(cplx s) const {
    if (s.real() <= 0.0 || s.real() >= 1.0) throw std::domain_error("EntireMellin: need 0 < Re s < 1");
    return direct(s);
  }

  // 0 < Re s < 1 only.
  cplx direct(cplx s) const {
    const double a = sol_.a;
    const cplx gfac = std::exp(-0.5 * s * std::log(std::numbers::pi) + log_gamma(0.5 * s));
    const cplx dirac = std::exp(-s * std::log(a));
    const cplx tail = phi_tail_mellin(sol_, s);
    if (sol_.sign == SonineSign::plus) return gfac * (std::sqrt(a) / 2) * (dirac + tail);
    return gfac * cplx(0.0, std::sqrt(a) / 2) * (dirac - tail);
  }

  // The real scalar whose sign changes locate zeros on Re s = 1/2.
  double critical_scalar(double t) const { return direct(cplx(0.5, t)).real(); }

 private:
  SonineSolution sol_;
};

inline cplx mellin_A(double a, SonineSign sign, cplx s, std::size_t n_nodes = 64) {
  return EntireMellin(solve_phi(a, sign, n_nodes))(s);
}

struct CriticalZero {
  double t = 0.0;
  double residual = 0.0;     // |calA(1/2 + i t)|
  double local_scale = 0.0;  // max |calA| at the bracket ends
};

struct ZeroList {
  std::vector<CriticalZero> zeros;
  double T = 0.0;
  double dt = 0.0;
  std::size_t count_T = 0;
  double asymptotic_ratio = 0.0;    // count / ((T/2pi) log T)
  double refined_prediction = 0.0;  // (T/2pi) log(T/2pi e) + 7/8
};

class GridTooCoarseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::size_t> sign_change_cells(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if ((v[i] < 0) != (v[i + 1] < 0) && v[i] != 0 && v[i + 1] != 0) out.push_back(i);
    else if (v[i + 1] == 0 && i + 2 < v.size()) out.push_back(i);
  return out;
}

}  // namespace detail

// Sign changes of Re calA_a(1/2+it) (or Re calB_a) on (0, T], bisected to 1e-9.
// The grid is accepted once halving dt finds the same number of changes.
inline ZeroList critical_line_zeros(const EntireMellin& F, double T, double dt = 0.05, int max_halvings = 4) {
  if (!(T > 0) || !(dt > 0)) throw std::invalid_argument("critical_line_zeros: need T > 0, dt > 0");
  auto sample = [&](double h) {
    std::vector<double> ts, vs;
    const auto m = static_cast<std::size_t>(std::ceil(T / h));
    for (std::size_t i = 1; i <= m; ++i) {
      ts.push_back(std::min(T, i * h));
      vs.push_back(F.critical_scalar(ts.back()));
    }
    return std::pair{ts, vs};
  };
  auto [ts, vs] = sample(dt);
  bool settled = false;
  for (int k = 0; k < max_halvings; ++k) {
    auto [ts2, vs2] = sample(dt / 2);
    const bool same = detail::sign_change_cells(vs2).size() == detail::sign_change_cells(vs).size();
    ts = std::move(ts2);
    vs = std::move(vs2);
    dt /= 2;
    if (same) {
      settled = true;
      break;
    }
  }
  if (!settled) throw GridTooCoarseError("critical_line_zeros: sign changes not stable under dt halving");
  ZeroList out;
  out.T = T;
  out.dt = dt;
  for (std::size_t i : detail::sign_change_cells(vs)) {
    double lo = ts[i], hi = ts[i + 1], flo = vs[i];
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      const double fm = F.critical_scalar(mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    CriticalZero z;
    z.t = 0.5 * (lo + hi);
    z.residual = std::abs(F.direct(cplx(0.5, z.t)));
    z.local_scale = std::max(std::abs(vs[i]), std::abs(vs[i + 1]));
    out.zeros.push_back(z);
  }
  out.count_T = out.zeros.size();
  const double pi2 = 2 * std::numbers::pi;
  out.asymptotic_ratio = T > 1 ? out.count_T / (T / pi2 * std::log(T)) : 0.0;
  out.refined_prediction = T / pi2 * std::log(T / (pi2 * std::numbers::e)) + 0.875;
  return out;
}

}  // namespace copoisson
