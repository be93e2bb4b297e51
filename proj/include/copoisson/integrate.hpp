#pragma once

// Generic integration engines: Gauss-Kronrod adaptive, Gauss-Legendre rules,
// half-line and oscillatory-tail summation, Neville extrapolation.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace copoisson {

using cplx = std::complex<double>;

template <class T>
struct QuadResult {
  T value{};
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, cplx best, double err)
      : std::runtime_error(what), best_(best), err_(err) {}
  cplx best_estimate() const { return best_; }
  double err_estimate() const { return err_; }

 private:
  cplx best_;
  double err_;
};

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LadderError : public std::runtime_error {
 public:
  LadderError(const std::string& what, double best) : std::runtime_error(what), best_(best) {}
  double best_estimate() const { return best_; }

 private:
  double best_;
};

namespace detail {

inline constexpr std::array<double, 8> gk15_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gk15_wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct Panel {
  double a, b;
  T value;
  double err;
};

// One Gauss-Kronrod 7/15 panel with the QUADPACK error heuristic.
template <class G>
auto gk15(const G& g, double a, double b) {
  using T = std::decay_t<std::invoke_result_t<const G&, double>>;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = g(c);
  T resk = fc * gk15_wk[7];
  T resg = fc * gk15_wg[3];
  double resabs = std::abs(fc) * gk15_wk[7];
  std::array<T, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = h * gk15_x[j];
    f1[j] = g(c - dx);
    f2[j] = g(c + dx);
    resk += (f1[j] + f2[j]) * gk15_wk[j];
    resabs += (std::abs(f1[j]) + std::abs(f2[j])) * gk15_wk[j];
    if (j % 2 == 1) resg += (f1[j] + f2[j]) * gk15_wg[j / 2];
  }
  const T mean = resk * 0.5;
  double resasc = std::abs(fc - mean) * gk15_wk[7];
  for (int j = 0; j < 7; ++j)
    resasc += (std::abs(f1[j] - mean) + std::abs(f2[j] - mean)) * gk15_wk[j];
  const double ah = std::abs(h);
  resasc *= ah;
  resabs *= ah;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(50 * eps * resabs, err);
  return Panel<T>{a, b, resk * h, err};
}

}  // namespace detail

// Global adaptive Gauss-Kronrod over [points.front(), points.back()], with
// the given interior points as initial panel boundaries.
template <class G>
auto integrate_adaptive(const G& g, std::vector<double> points, double tol,
                        std::size_t max_panels = 200000) {
  using T = std::decay_t<std::invoke_result_t<const G&, double>>;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 2) return QuadResult<T>{T{}, 0.0, 1};
  using P = detail::Panel<T>;
  auto cmp = [](const P& x, const P& y) { return x.err < y.err; };
  std::vector<P> heap;
  heap.reserve(points.size() * 2);
  std::size_t evals = 0;
  T total{};
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    heap.push_back(detail::gk15(g, points[i], points[i + 1]));
    evals += 15;
  }
  std::make_heap(heap.begin(), heap.end(), cmp);
  std::vector<P> frozen;
  auto totals = [&]() {
    total = T{};
    err = 0.0;
    for (const auto& p : heap) {
      total += p.value;
      err += p.err;
    }
    for (const auto& p : frozen) {
      total += p.value;
      err += p.err;
    }
  };
  totals();
  std::size_t since_resum = 0;
  while (err > tol && !heap.empty()) {
    if (heap.size() + frozen.size() >= max_panels)
      throw QuadratureError("integrate_adaptive: panel limit reached", cplx(total), err);
    std::pop_heap(heap.begin(), heap.end(), cmp);
    P worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (worst.b - worst.a <= 64 * std::numeric_limits<double>::epsilon() * scale) {
      frozen.push_back(worst);
      continue;
    }
    P l = detail::gk15(g, worst.a, mid);
    P r = detail::gk15(g, mid, worst.b);
    evals += 30;
    total += l.value + r.value - worst.value;
    err += l.err + r.err - worst.err;
    heap.push_back(l);
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(r);
    std::push_heap(heap.begin(), heap.end(), cmp);
    if (++since_resum == 256) {
      totals();
      since_resum = 0;
    }
  }
  totals();
  return QuadResult<T>{total, err, evals};
}

template <class G>
auto integrate_adaptive(const G& g, double lo, double hi, double tol) {
  return integrate_adaptive(g, std::vector<double>{lo, hi}, tol);
}

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration.
struct GaussLegendre {
  std::vector<double> x, w;
};

inline GaussLegendre gauss_legendre(std::size_t n) {
  GaussLegendre r{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

// Repeated averaging of partial sums (Euler transformation). Returns the
// estimate from the last depth+1 partial sums.
inline double euler_average(const std::vector<double>& partial, std::size_t depth) {
  const std::size_t n = partial.size();
  depth = std::min(depth, n - 1);
  std::vector<double> row(partial.end() - static_cast<std::ptrdiff_t>(depth + 1), partial.end());
  for (std::size_t d = 0; d < depth; ++d)
    for (std::size_t i = 0; i + 1 < row.size() - d; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
  return row[0];
}

// Sum of panel integrals over [start + k*h, start + (k+1)*h], k = 0, 1, ...
// with Euler acceleration of the partial sums. `panel(a, b)` returns the
// integral over one panel. Stops once the accelerated value is stable and the
// panels have become small.
template <class PanelFn>
QuadResult<double> sum_oscillatory_panels(const PanelFn& panel, double start, double h, double tol,
                                          std::size_t min_panels = 8, std::size_t max_panels = 200000) {
  std::vector<double> partial;
  partial.reserve(256);
  double s = 0.0, prev = 0.0, prev2 = 0.0;
  std::size_t stable = 0;
  for (std::size_t k = 0; k < max_panels; ++k) {
    const double a = start + k * h;
    const double v = panel(a, a + h);
    s += v;
    partial.push_back(s);
    if (partial.size() < std::max<std::size_t>(min_panels, 4)) continue;
    const double est = euler_average(partial, 24);
    const double d1 = std::abs(est - prev), d2 = std::abs(prev - prev2);
    prev2 = prev;
    prev = est;
    if (d1 <= 0.25 * tol && d2 <= 0.25 * tol && std::abs(v) <= 16 * tol + 1e-3 * std::abs(est))
      ++stable;
    else
      stable = 0;
    if (stable >= 3) return {est, std::max(d1, d2), partial.size()};
  }
  throw DivergenceError("oscillatory tail did not converge");
}

// Neville extrapolation to h = 0 from samples (h_i, v_i). Returns the value
// and the difference with the extrapolant that omits the last sample.
struct Extrapolated {
  double value;
  double err_estimate;
};

inline Extrapolated neville_to_zero(const std::vector<double>& h, const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n == 0 || h.size() != n) throw std::invalid_argument("neville_to_zero: size mismatch");
  auto eval = [&](std::size_t m) {
    std::vector<double> p(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t k = 1; k < m; ++k)
      for (std::size_t i = 0; i + k < m; ++i)
        p[i] = (h[i] * p[i + 1] - h[i + k] * p[i]) / (h[i] - h[i + k]);
    return p[0];
  };
  const double full = eval(n);
  const double less = n > 1 ? eval(n - 1) : full;
  return {full, std::abs(full - less)};
}

// Integral of a decaying non-oscillatory g over [lo, inf) by doubling panels.
template <class G>
QuadResult<double> integrate_to_infinity(const G& g, double lo, double tol, double first = 1.0,
                                         double cap = 1e12) {
  double a = lo, w = first, total = 0.0, err = 0.0;
  std::size_t evals = 0, small = 0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 400; ++k) {
    auto r = integrate_adaptive(g, a, a + w, tol / 16);
    total += r.value;
    err += r.err_estimate;
    evals += r.evaluations;
    const double c = std::abs(r.value);
    if (std::abs(total) > cap || (k > 40 && c > 0.5 * last && c > tol))
      throw DivergenceError("integral on half line diverges");
    last = c;
    small = c <= tol / 8 ? small + 1 : 0;
    if (small >= 3) return {total, err + c, evals};
    a += w;
    w *= 2;
  }
  throw DivergenceError("integral on half line did not settle");
}

}  // namespace copoisson
