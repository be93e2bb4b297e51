#pragma once

// Explicit self-reciprocal functions built from finite lattice sums, and their
// support, reciprocity and square-integrability checks.

#include <copoisson/integrate.hpp>
#include <copoisson/quad.hpp>
#include <copoisson/report.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace copoisson {

enum class GalleryFamily { even_fa, odd_fa, odd_ga, odd_ka, qn };

inline const char* to_string(GalleryFamily f) {
  switch (f) {
    case GalleryFamily::even_fa: return "even_fa";
    case GalleryFamily::odd_fa: return "odd_fa";
    case GalleryFamily::odd_ga: return "odd_ga";
    case GalleryFamily::odd_ka: return "odd_ka";
    case GalleryFamily::qn: return "qn";
  }
  return "?";
}

inline GalleryFamily parse_family(const std::string& s) {
  for (auto f : {GalleryFamily::even_fa, GalleryFamily::odd_fa, GalleryFamily::odd_ga, GalleryFamily::odd_ka,
                 GalleryFamily::qn})
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown gallery family: " + s);
}

struct GalleryParams {
  double a = 0.5;  // 0 < a < 1, A = 1/a
  int N = 1;       // qn only
};

namespace detail {

// qn terms: sign (-1)^n times Q_N(n) b^(2N+1), b = (t - al)(t - be), t = x/(n + 1/2),
// over x r - 1/2 <= n <= 2 x r - 1/2 with r = sqrt(N + 1/2).
inline double qn_direct(int N, double x, double lo, double hi) {
  const double r = std::sqrt(N + 0.5), al = 1 / std::sqrt(4.0 * N + 2), be = 1 / r;
  double s = 0.0;
  double sg = std::fmod(lo, 2.0) != 0 ? -1.0 : 1.0;
  for (double n = lo; n <= hi; n += 1, sg = -sg) {
    double Q = 1.0;
    for (int j = 0; j < N; ++j) Q *= n * (n + 1) - j * (j + 1.0);
    if (Q == 0.0) continue;
    const double t = x / (n + 0.5);
    const double b = (t - al) * (t - be);
    double bp = b;
    for (int k = 0; k < N; ++k) bp *= b * b;
    s += sg * Q * bp;
  }
  return s;
}

constexpr int qn_max_order = 96;
using QnSeries = std::array<double, qn_max_order>;

// k! times the Taylor coefficients of 1/(1 + e^z).
inline const QnSeries& alternating_weights() {
  static const QnSeries w = [] {
    QnSeries g{}, inv{};
    inv[0] = 1.0;
    for (int i = 1; i < qn_max_order; ++i) inv[i] = inv[i - 1] / i;
    g[0] = 0.5;
    for (int k = 1; k < qn_max_order; ++k) {
      double s = 0.0;
      for (int i = 1; i <= k; ++i) s += g[k - i] * inv[i];
      g[k] = -s / 2;
    }
    double fact = 1.0;
    for (int k = 1; k < qn_max_order; ++k) g[k] *= (fact *= k);
    return g;
  }();
  return w;
}

// h(n0) = (1 + e^D)^(-1) applied to the qn term, from its Taylor series at n0.
inline double qn_boundary(int N, double x, double n0, int order) {
  const double r = std::sqrt(N + 0.5), al = 1 / std::sqrt(4.0 * N + 2), be = 1 / r;
  const double m0 = n0 + 0.5;
  auto mul = [order](const QnSeries& a, const QnSeries& b) {
    QnSeries c{};
    for (int i = 0; i < order; ++i)
      if (a[i] != 0.0)
        for (int j = 0; i + j < order; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  QnSeries f{};
  f[0] = 1.0;
  for (int j = 0; j < N; ++j) {
    QnSeries q{};
    q[0] = n0 * (n0 + 1) - j * (j + 1.0);
    q[1] = 2 * n0 + 1;
    q[2] = 1.0;
    f = mul(f, q);
  }
  // (x - al m)(x - be m) with m = m0 + u
  const double ua = std::fma(-al, m0, x), ub = std::fma(-be, m0, x);
  QnSeries lin{};
  lin[0] = ua * ub;
  lin[1] = -al * ub - be * ua;
  lin[2] = al * be;
  for (int k = 0; k < 2 * N + 1; ++k) f = mul(f, lin);
  const int p = 4 * N + 2;
  QnSeries d{};
  double c = std::pow(m0, -p);
  for (int k = 0; k < order; ++k) {
    d[k] = c;
    c *= -(p + k) / ((k + 1) * m0);
  }
  f = mul(f, d);
  const auto& w = alternating_weights();
  double h = 0.0;
  for (int k = 0; k < order; ++k) h += w[k] * f[k];
  return h;
}

// The alternating sum cancels down to boundary terms; summing it directly loses
// all digits once the terms reach ~1e16 times the result (N = 2 near x = 1e4).
inline double qn_value(int N, double x) {
  const double r = std::sqrt(N + 0.5);
  const double lo = std::max(0.0, std::ceil(x * r - 0.5)), hi = std::floor(2 * x * r - 0.5);
  if (hi < lo) return 0.0;
  if (N == 0 || lo < 20 + 4 * N) return qn_direct(N, x, lo, hi);
  const int order = std::min(qn_max_order, 30 + 10 * N);
  const double sl = std::fmod(lo, 2.0) != 0 ? -1.0 : 1.0, sh = std::fmod(hi, 2.0) != 0 ? -1.0 : 1.0;
  return sl * qn_boundary(N, x, lo, order) + sh * qn_boundary(N, x, hi + 1, order);
}

}  // namespace detail

class GalleryFunction {
 public:
  GalleryFunction(GalleryFamily family, GalleryParams p, double x_capacity = 2e4) : family_(family), p_(p) {
    if (family != GalleryFamily::qn && !(p.a > 0 && p.a < 1)) throw std::invalid_argument("gallery: need 0 < a < 1");
    if (family == GalleryFamily::qn && p.N < 0) throw std::invalid_argument("gallery: need N >= 0");
    if (family != GalleryFamily::qn) build_prefix(static_cast<std::size_t>(std::ceil(x_capacity / p.a)) + 2);
  }

  GalleryFamily family() const { return family_; }
  const GalleryParams& params() const { return p_; }
  Parity parity() const {
    return (family_ == GalleryFamily::even_fa || family_ == GalleryFamily::qn) ? Parity::even : Parity::odd;
  }

  std::string name() const {
    if (family_ == GalleryFamily::qn) return "qn:" + std::to_string(p_.N);
    return std::string(to_string(family_)) + ":" + format_double(p_.a);
  }

  // Functions vanish on (-gap, gap).
  double gap() const {
    switch (family_) {
      case GalleryFamily::even_fa: return p_.a;
      case GalleryFamily::qn: return 0.5 * std::sqrt(p_.N + 0.5);
      default: return 0.5 * p_.a;
    }
  }

  double operator()(double x) const {
    if (x == 0.0) return 0.0;
    if (x < 0) return parity() == Parity::even ? half_line(-x) : -half_line(-x);
    return half_line(x);
  }

  // Points in (lo, hi) where the index set changes.
  std::vector<double> breakpoints(double lo, double hi) const {
    std::vector<double> out;
    auto add_lattice = [&](double step, double shift) {
      for (double k = std::max(0.0, std::ceil(lo / step - shift)); (k + shift) * step < hi; k += 1) {
        const double x = (k + shift) * step;
        if (x > lo) out.push_back(x);
      }
    };
    const double A = 1 / p_.a;
    switch (family_) {
      case GalleryFamily::even_fa:  // a x = n, A x = n
        add_lattice(A, 0.0);
        add_lattice(p_.a, 0.0);
        break;
      case GalleryFamily::qn: {
        const double r = std::sqrt(p_.N + 0.5);
        add_lattice(1 / r, 0.5);
        add_lattice(0.5 / r, 0.5);
        break;
      }
      default:  // a x = n + 1/2, A x = n + 1/2
        add_lattice(A, 0.5);
        add_lattice(p_.a, 0.5);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  struct Prefix {
    std::vector<long double> s1, s2, s3;  // per-family partial sums, index n
  };

  GalleryFamily family_;
  GalleryParams p_;
  std::shared_ptr<const Prefix> pre_;

  void build_prefix(std::size_t n) {
    auto p = std::make_shared<Prefix>();
    p->s1.assign(n + 1, 0.0L);
    p->s2.assign(n + 1, 0.0L);
    p->s3.assign(n + 1, 0.0L);
    // even: s_k[n] = sum_{1<=m<=n} m^(-3/2), m^(1/2), m^(-1/2)
    // odd:  s_k[n] = sum_{0<=m<n} (-1)^m, (-1)^m/(m+1/2), (-1)^m/sqrt(m+1/2)
    for (std::size_t m = 1; m <= n; ++m) {
      if (family_ == GalleryFamily::even_fa) {
        const long double v = m;
        p->s1[m] = p->s1[m - 1] + 1.0L / (v * std::sqrt(v));
        p->s2[m] = p->s2[m - 1] + std::sqrt(v);
        p->s3[m] = p->s3[m - 1] + 1.0L / std::sqrt(v);
      } else {
        const long double h = (m - 1) + 0.5L;
        const long double sg = ((m - 1) % 2) ? -1.0L : 1.0L;
        p->s1[m] = p->s1[m - 1] + sg;
        p->s2[m] = p->s2[m - 1] + sg / h;
        p->s3[m] = p->s3[m - 1] + sg / std::sqrt(h);
      }
    }
    pre_ = std::move(p);
  }

  double half_line(double x) const {
    const double a = p_.a, A = 1 / a;
    switch (family_) {
      case GalleryFamily::even_fa: {
        const double lo = std::max(1.0, std::ceil(a * x)), hi = std::floor(A * x);
        if (hi < lo) return 0.0;
        const auto l = static_cast<std::size_t>(lo), h = static_cast<std::size_t>(hi);
        const double c = A + a + 4;
        if (h < pre_->s1.size()) {
          const long double S1 = pre_->s1[h] - pre_->s1[l - 1];
          const long double S2 = pre_->s2[h] - pre_->s2[l - 1];
          const long double S3 = pre_->s3[h] - pre_->s3[l - 1];
          return static_cast<double>((3.0L * x * S1 + 3.0L / x * S2 - c * S3) / std::sqrt(static_cast<long double>(x)));
        }
        double s = 0.0;
        for (std::size_t n = l; n <= h; ++n) s += (3 * (x / n + n / x) - c) / std::sqrt(n * x);
        return s;
      }
      case GalleryFamily::odd_fa:
      case GalleryFamily::odd_ga:
      case GalleryFamily::odd_ka: {
        const double lo = std::max(0.0, std::ceil(a * x - 0.5)), hi = std::floor(A * x - 0.5);
        if (hi < lo) return 0.0;
        const auto l = static_cast<std::size_t>(lo), h = static_cast<std::size_t>(hi);
        if (h + 1 < pre_->s1.size()) {
          if (family_ == GalleryFamily::odd_fa) return static_cast<double>((pre_->s1[h + 1] - pre_->s1[l]) / x);
          if (family_ == GalleryFamily::odd_ga) return static_cast<double>(pre_->s2[h + 1] - pre_->s2[l]);
          return static_cast<double>((pre_->s3[h + 1] - pre_->s3[l]) / std::sqrt(static_cast<long double>(x)));
        }
        double s = 0.0;
        for (std::size_t n = l; n <= h; ++n) {
          const double sg = n % 2 ? -1.0 : 1.0;
          if (family_ == GalleryFamily::odd_fa) s += sg / x;
          else if (family_ == GalleryFamily::odd_ga) s += sg / (n + 0.5);
          else s += sg / std::sqrt((n + 0.5) * x);
        }
        return s;
      }
      case GalleryFamily::qn: return detail::qn_value(p_.N, x);
    }
    return 0.0;
  }
};

inline double gallery_eval(GalleryFamily family, GalleryParams p, double x) { return GalleryFunction(family, p)(x); }

namespace detail {

// int over [lo, hi] of g on breakpoint-aligned panels of length <= max_len,
// fixed Gauss-Legendre per panel (g smooth between breakpoints).
template <class G>
double gallery_panels(const GalleryFunction& f, const G& g, double lo, double hi, double max_len, std::size_t nodes = 16) {
  const auto gl = gauss_legendre(nodes);
  std::vector<double> pts{lo};
  for (double b : f.breakpoints(lo, hi)) pts.push_back(b);
  pts.push_back(hi);
  long double total = 0.0L;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double w = pts[i + 1] - pts[i];
    if (!(w > 0)) continue;
    const auto m = static_cast<std::size_t>(std::ceil(w / max_len));
    for (std::size_t j = 0; j < m; ++j) {
      const double a = pts[i] + w * j / m, b = pts[i] + w * (j + 1) / m;
      double s = 0.0;
      for (std::size_t k = 0; k < nodes; ++k) s += gl.w[k] * g(0.5 * (b - a) * (gl.x[k] + 1) + a);
      total += 0.5 * (b - a) * s;
    }
  }
  return static_cast<double>(total);
}

}  // namespace detail

// Transform of e^(-eps x) f(x) (cosine for even, sine for odd).
inline double gallery_damped_transform(const GalleryFunction& f, double y, double eps) {
  const double w = 2 * std::numbers::pi * y;
  const bool even = f.parity() == Parity::even;
  auto g = [&](double x) { return 2 * (even ? std::cos(w * x) : std::sin(w * x)) * std::exp(-eps * x) * f(x); };
  const double max_len = y != 0 ? std::min(0.5, 0.25 / std::abs(y)) : 0.5;
  return detail::gallery_panels(f, g, f.gap(), 38.0 / eps, max_len);
}

inline AbelResult gallery_abel_transform(const GalleryFunction& f, double y, const std::vector<double>& ladder) {
  AbelResult r;
  r.eps = ladder;
  for (double e : ladder) r.ladder.push_back(gallery_damped_transform(f, y, e));
  const auto ex = neville_to_zero(r.eps, r.ladder);
  r.value = ex.value;
  r.err_estimate = ex.err_estimate;
  return r;
}

inline const std::vector<double>& default_gallery_ladder(GalleryFamily f) {
  static const std::vector<double> lattice{0.04, 0.02, 0.01, 0.005};
  static const std::vector<double> poly{0.16, 0.08, 0.04, 0.02};
  return f == GalleryFamily::qn ? poly : lattice;
}

// Exact zeros on a grid inside the gap (tolerance 0).
inline std::vector<IdentityReport> verify_support(const GalleryFunction& f, std::vector<double> grid = {}) {
  if (grid.empty())
    for (int k = 1; k <= 10; ++k) grid.push_back(f.gap() * k / 11.0);
  std::vector<IdentityReport> out;
  for (double x : grid) {
    if (!(std::abs(x) < f.gap())) throw std::invalid_argument("verify_support: point outside the gap");
    nlohmann::ordered_json p;
    p["family"] = f.name();
    p["x"] = x;
    out.push_back(make_report("gallery_support", p, f(x), 0.0, 0.0));
  }
  return out;
}

// The claimed transform of f: f itself (even_fa, odd_ka), the partner
// (odd_fa <-> odd_ga), or 0 inside the gap (qn).
inline std::optional<GalleryFunction> reciprocal_partner(const GalleryFunction& f) {
  switch (f.family()) {
    case GalleryFamily::odd_fa: return GalleryFunction(GalleryFamily::odd_ga, f.params());
    case GalleryFamily::odd_ga: return GalleryFunction(GalleryFamily::odd_fa, f.params());
    case GalleryFamily::qn: return std::nullopt;
    default: return f;
  }
}

inline std::vector<IdentityReport> verify_reciprocity(const GalleryFunction& f, const std::vector<double>& ys,
                                                      double tol = 5e-3, std::vector<double> ladder = {}) {
  if (ladder.empty()) ladder = default_gallery_ladder(f.family());
  const auto partner = reciprocal_partner(f);
  std::vector<IdentityReport> out;
  for (double y : ys) {
    if (!partner && !(std::abs(y) < f.gap()))
      throw std::invalid_argument("verify_reciprocity: qn target known only inside the gap");
    const auto r = gallery_abel_transform(f, y, ladder);
    nlohmann::ordered_json p;
    p["family"] = f.name();
    p["y"] = y;
    p["ladder"] = ladder;
    p["abel_err"] = r.err_estimate;
    out.push_back(make_report("gallery_reciprocity", p, r.value, partner ? (*partner)(y) : 0.0, tol));
  }
  return out;
}

// int_0^X f^2 for increasing X; the increments must contract by half.
inline IdentityReport l2_truncation(const GalleryFunction& f, const std::vector<double>& Xs = {1e2, 1e3, 1e4}) {
  if (Xs.size() < 3) throw std::invalid_argument("l2_truncation: need three cutoffs");
  auto g = [&](double x) {
    const double v = f(x);
    return v * v;
  };
  std::vector<double> I;
  double acc = 0.0, prev = f.gap();
  for (double X : Xs) {
    acc += detail::gallery_panels(f, g, prev, X, 0.5, 8);
    I.push_back(acc);
    prev = X;
  }
  const std::size_t k = I.size();
  const double d1 = I[k - 2] - I[k - 3], d2 = I[k - 1] - I[k - 2];
  nlohmann::ordered_json p;
  p["family"] = f.name();
  p["X"] = Xs;
  p["integrals"] = I;
  return make_report("gallery_l2_cauchy", p, d2, 0.0, 0.5 * d1);
}

}  // namespace copoisson
