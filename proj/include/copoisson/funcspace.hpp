#pragma once

// Test-function universe: even/odd functions on (0, inf) with metadata.

#include <copoisson/integrate.hpp>

#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace copoisson {

enum class Parity { even, odd };
enum class Smoothness { measurable, bv, c1, cinf };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct Interval {
  double lo, hi;
};

// Decreasing integrable k >= |f| with its tail integral U -> int_U^inf k.
struct TailMajorant {
  std::function<double(double)> k;
  std::function<double(double)> tail;
};

struct KnownIntegrals {
  std::optional<double> direct;    // int_0^inf f(u) du
  std::optional<double> inverted;  // int_0^inf f(1/u)/u du = int_0^inf f(v)/v dv
};

struct FunctionSpec {
  std::string name;
  Parity parity = Parity::even;
  std::function<double(double)> eval;
  std::optional<Interval> support;
  Smoothness smoothness = Smoothness::measurable;
  bool satisfies_c = false;
  bool is_l1 = false;
  bool is_l2 = false;
  KnownIntegrals known;
  std::optional<TailMajorant> majorant;
  // Points of non-smoothness inside (lo, hi), used to split quadrature panels.
  std::function<std::vector<double>(double, double)> breaks;
  std::function<double(double)> derivative;
  // Value at 0 for even functions, when eval is not defined there.
  std::optional<double> value_at_zero;
  // Closed-form cosine/sine transform, when known.
  std::function<double(double)> known_transform;
};

class ParityFunction {
 public:
  ParityFunction() : ParityFunction(zero_spec()) {}
  explicit ParityFunction(FunctionSpec spec)
      : spec_(std::make_shared<const FunctionSpec>(std::move(spec))), cache_(std::make_shared<Cache>()) {
    if (!spec_->eval) throw std::invalid_argument("ParityFunction: missing evaluator");
    if (spec_->support && !(spec_->support->lo < spec_->support->hi))
      throw std::invalid_argument("ParityFunction: empty support");
  }

  // Value on the real line, extended by parity.
  double operator()(double x) const {
    if (x < 0) return spec_->parity == Parity::even ? half_line(-x) : -half_line(-x);
    if (x == 0) {
      if (spec_->parity == Parity::odd) return 0.0;
      if (spec_->value_at_zero) return *spec_->value_at_zero;
    }
    return half_line(x);
  }

  double half_line(double x) const {
    if (spec_->support && (x < spec_->support->lo || x > spec_->support->hi)) return 0.0;
    return spec_->eval(x);
  }

  const std::string& name() const { return spec_->name; }
  Parity parity() const { return spec_->parity; }
  const std::optional<Interval>& support() const { return spec_->support; }
  Smoothness smoothness() const { return spec_->smoothness; }
  bool satisfies_c() const { return spec_->satisfies_c; }
  bool is_l1() const { return spec_->is_l1; }
  bool is_l2() const { return spec_->is_l2; }
  const KnownIntegrals& known_integrals() const { return spec_->known; }
  const std::optional<TailMajorant>& tail_majorant() const { return spec_->majorant; }
  const std::function<double(double)>& known_transform() const { return spec_->known_transform; }
  const FunctionSpec& spec() const { return *spec_; }
  bool has_derivative() const { return static_cast<bool>(spec_->derivative); }

  double derivative(double x) const {
    if (spec_->derivative) {
      if (spec_->support && (x < spec_->support->lo || x > spec_->support->hi)) return 0.0;
      return spec_->derivative(x);
    }
    const double h = 1e-4 * std::max(1.0, std::abs(x));
    auto d = [&](double s) { return (half_line(x + s) - half_line(x - s)) / (2 * s); };
    return (4 * d(h / 2) - d(h)) / 3;
  }

  // Non-smooth points strictly inside (lo, hi), support ends included.
  std::vector<double> breakpoints(double lo, double hi) const {
    std::vector<double> out;
    if (spec_->breaks) out = spec_->breaks(lo, hi);
    if (spec_->support) {
      for (double e : {spec_->support->lo, spec_->support->hi})
        if (e > lo && e < hi) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Panel boundaries covering [lo, hi] with breakpoints and panels no longer
  // than max_len.
  std::vector<double> panels(double lo, double hi, double max_len = 0.0) const {
    std::vector<double> pts{lo};
    for (double p : breakpoints(lo, hi)) pts.push_back(p);
    pts.push_back(hi);
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

  // Cached int_0^inf f.
  double integral() const {
    return cached(cache_->direct, cache_->direct_once, [this] {
      if (spec_->known.direct) return *spec_->known.direct;
      return integrate_weighted([](double) { return 1.0; });
    });
  }

  // Cached int_0^inf f(v)/v dv.
  double inverted_integral() const {
    return cached(cache_->inverted, cache_->inverted_once, [this] {
      if (spec_->known.inverted) return *spec_->known.inverted;
      return integrate_weighted([](double v) { return 1.0 / v; });
    });
  }

  // int_0^inf f(x) w(x) dx by quadrature.
  template <class W>
  double integrate_weighted(const W& w, double tol = 1e-13) const {
    auto g = [&](double x) { return half_line(x) * w(x); };
    if (spec_->support && spec_->support->lo > 0) {
      const auto& s = *spec_->support;
      return integrate_adaptive(g, panels(s.lo, s.hi), tol).value;
    }
    double total = 0.0;
    auto head = [&](double lo, double hi) { return integrate_adaptive(g, panels(lo, hi), tol / 4).value; };
    // (0, 1] by dyadic shells towards 0.
    double last = 0.0;
    int small = 0;
    for (int k = 0; k < 200; ++k) {
      const double hi = std::ldexp(1.0, -k), lo = hi / 2;
      const double c = head(lo, hi);
      total += c;
      if (k > 40 && std::abs(c) > 0.5 * std::abs(last) && std::abs(c) > tol)
        throw DivergenceError(name() + ": integral diverges at 0");
      last = c;
      small = std::abs(c) < tol / 8 ? small + 1 : 0;
      if (small >= 3) break;
    }
    small = 0;
    last = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double lo = std::ldexp(1.0, k), hi = 2 * lo;
      const double c = head(lo, hi);
      total += c;
      if (k > 40 && std::abs(c) > 0.5 * std::abs(last) && std::abs(c) > tol)
        throw DivergenceError(name() + ": integral diverges at infinity");
      last = c;
      small = std::abs(c) < tol / 8 ? small + 1 : 0;
      if (small >= 3) break;
    }
    return total;
  }

  static FunctionSpec zero_spec() {
    FunctionSpec s;
    s.name = "zero";
    s.eval = [](double) { return 0.0; };
    s.support = Interval{1.0, 2.0};
    s.smoothness = Smoothness::cinf;
    s.satisfies_c = s.is_l1 = s.is_l2 = true;
    s.known = {0.0, 0.0};
    s.derivative = [](double) { return 0.0; };
    return s;
  }

 private:
  struct Cache {
    std::once_flag direct_once, inverted_once;
    double direct = 0.0, inverted = 0.0;
  };

  template <class Fn>
  static double cached(double& slot, std::once_flag& flag, const Fn& fn) {
    std::call_once(flag, [&] { slot = fn(); });
    return slot;
  }

  std::shared_ptr<const FunctionSpec> spec_;
  std::shared_ptr<Cache> cache_;
};

// Samples on a strictly increasing grid, linearly interpolated.
struct GridFunction {
  enum class Kind { even, odd, none };
  std::vector<double> grid;
  std::vector<double> values;
  Kind parity = Kind::none;

  GridFunction() = default;
  GridFunction(std::vector<double> g, std::vector<double> v, Kind p = Kind::none)
      : grid(std::move(g)), values(std::move(v)), parity(p) {
    if (grid.size() != values.size() || grid.empty()) throw std::invalid_argument("GridFunction: size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
      if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("GridFunction: grid not increasing");
    for (double v : values)
      if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite value");
  }

  template <class Fn>
  static GridFunction sample(const Fn& fn, std::vector<double> g, Kind p = Kind::none) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = fn(g[i]);
    return GridFunction(std::move(g), std::move(v), p);
  }

  double operator()(double x) const {
    if (x < 0 && parity != Kind::none) return parity == Kind::even ? (*this)(-x) : -(*this)(-x);
    if (x <= grid.front()) return values.front();
    if (x >= grid.back()) return values.back();
    const auto it = std::upper_bound(grid.begin(), grid.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
    const double t = (x - grid[i]) / (grid[i + 1] - grid[i]);
    return (1 - t) * values[i] + t * values[i + 1];
  }
};

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline std::vector<double> integer_breaks(double lo, double hi) {
  std::vector<double> out;
  for (double n = std::floor(lo) + 1; n < hi; n += 1) out.push_back(n);
  return out;
}

inline double param(const std::vector<double>& p, std::size_t i, double dflt) {
  return i < p.size() ? p[i] : dflt;
}

inline std::string format_name(const std::string& name, const std::vector<double>& p) {
  std::ostringstream os;
  os << name;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : ":") << p[i];
  return os.str();
}

inline FunctionSpec bump_spec(double b, double B, Parity parity) {
  require(b < B, "bump: need b < B");
  const double h2 = 0.25 * (B - b) * (B - b);
  FunctionSpec s;
  s.parity = parity;
  s.eval = [=](double x) {
    if (x <= b || x >= B) return 0.0;
    return std::exp(1.0 / h2 - 1.0 / ((x - b) * (B - x)));
  };
  s.derivative = [=](double x) {
    if (x <= b || x >= B) return 0.0;
    const double q = (x - b) * (B - x);
    return std::exp(1.0 / h2 - 1.0 / q) * (B + b - 2 * x) / (q * q);
  };
  s.support = Interval{b, B};
  s.smoothness = Smoothness::cinf;
  s.satisfies_c = b > 0;
  s.is_l1 = s.is_l2 = true;
  return s;
}

}  // namespace detail

// Built-in closed forms. Names: gaussian, bump(b,B), indicator(b,B),
// triangle(b,B), fracpart_over_x, poly_log_tail(p), plus zero, odd_bump(b,B),
// cbump(b), x_gaussian, x2_gaussian, tent(w), fejer(w).
inline ParityFunction builtin_function(const std::string& name, const std::vector<double>& p = {}) {
  using detail::require;
  constexpr double pi = std::numbers::pi;
  FunctionSpec s;
  if (name == "zero") {
    s = ParityFunction::zero_spec();
  } else if (name == "gaussian") {
    s.eval = [](double x) { return std::exp(-pi * x * x); };
    s.derivative = [](double x) { return -2 * pi * x * std::exp(-pi * x * x); };
    s.known_transform = [](double y) { return std::exp(-pi * y * y); };
    s.smoothness = Smoothness::cinf;
    s.is_l1 = s.is_l2 = true;
    s.known.direct = 0.5;
    s.majorant = TailMajorant{[](double x) { return std::exp(-pi * x * x); },
                              [](double u) { return 0.5 * std::erfc(std::sqrt(pi) * u); }};
  } else if (name == "x2_gaussian") {
    const double xs = 1 / std::sqrt(pi);
    auto f = [](double x) { return x * x * std::exp(-pi * x * x); };
    auto tail = [=](double u) {
      return u * std::exp(-pi * u * u) / (2 * pi) + std::erfc(std::sqrt(pi) * u) / (4 * pi);
    };
    s.eval = f;
    s.derivative = [](double x) { return (2 * x - 2 * pi * x * x * x) * std::exp(-pi * x * x); };
    s.smoothness = Smoothness::cinf;
    s.satisfies_c = s.is_l1 = s.is_l2 = true;
    s.known = {1 / (4 * pi), 1 / (2 * pi)};
    s.majorant = TailMajorant{[=](double x) { return f(std::max(x, xs)); },
                              [=](double u) { return u < xs ? f(xs) * (xs - u) + tail(xs) : tail(u); }};
  } else if (name == "x_gaussian") {
    s.parity = Parity::odd;
    s.eval = [](double x) { return x * std::exp(-pi * x * x); };
    s.derivative = [](double x) { return (1 - 2 * pi * x * x) * std::exp(-pi * x * x); };
    s.smoothness = Smoothness::cinf;
    s.satisfies_c = s.is_l1 = s.is_l2 = true;
    s.known = {1 / (2 * pi), 0.5};
    const double xs = 1 / std::sqrt(2 * pi);
    auto f = [](double x) { return x * std::exp(-pi * x * x); };
    s.majorant = TailMajorant{[=](double x) { return f(std::max(x, xs)); },
                              [=](double u) {
                                const double t = std::exp(-pi * std::max(u, xs) * std::max(u, xs)) / (2 * pi);
                                return u < xs ? f(xs) * (xs - u) + t : t;
                              }};
  } else if (name == "bump" || name == "odd_bump") {
    require(p.size() == 2, name + " needs two parameters b,B");
    s = detail::bump_spec(p[0], p[1], name == "bump" ? Parity::even : Parity::odd);
  } else if (name == "cbump") {
    const double b = detail::param(p, 0, 0.25);
    require(b > 0, "cbump: need b > 0");
    s.eval = [=](double x) { return x >= b ? 0.0 : std::exp(1 / (b * b) - 1 / (b * b - x * x)); };
    s.derivative = [=](double x) {
      if (x >= b) return 0.0;
      const double q = b * b - x * x;
      return -2 * x / (q * q) * std::exp(1 / (b * b) - 1 / q);
    };
    s.value_at_zero = 1.0;
    s.support = Interval{0.0, b};
    s.smoothness = Smoothness::cinf;
    s.is_l1 = s.is_l2 = true;
  } else if (name == "indicator") {
    require(p.size() == 2, "indicator needs two parameters b,B");
    const double b = p[0], B = p[1];
    require(0 < b && b < B, "indicator: need 0 < b < B");
    s.eval = [=](double x) { return (x == b || x == B) ? 0.5 : ((x > b && x < B) ? 1.0 : 0.0); };
    s.derivative = [](double) { return 0.0; };
    s.support = Interval{b, B};
    s.smoothness = Smoothness::bv;
    s.satisfies_c = s.is_l1 = s.is_l2 = true;
    s.known = {B - b, std::log(B / b)};
  } else if (name == "triangle") {
    require(p.size() == 2, "triangle needs two parameters b,B");
    const double b = p[0], B = p[1], m = 0.5 * (b + B);
    require(0 < b && b < B, "triangle: need 0 < b < B");
    s.eval = [=](double x) { return x <= m ? (x - b) / (m - b) : (B - x) / (B - m); };
    s.derivative = [=](double x) { return x < m ? 1 / (m - b) : -1 / (B - m); };
    s.breaks = [=](double lo, double hi) {
      return (m > lo && m < hi) ? std::vector<double>{m} : std::vector<double>{};
    };
    s.support = Interval{b, B};
    s.smoothness = Smoothness::bv;
    s.satisfies_c = s.is_l1 = s.is_l2 = true;
    s.known = {0.5 * (B - b), B * std::log(B / m) / (B - m) - b * std::log(m / b) / (m - b)};
  } else if (name == "tent") {
    const double w = detail::param(p, 0, 1.0);
    require(w > 0, "tent: need w > 0");
    s.eval = [=](double x) { return std::max(0.0, 1 - x / w); };
    s.value_at_zero = 1.0;
    s.support = Interval{0.0, w};
    s.smoothness = Smoothness::bv;
    s.is_l1 = s.is_l2 = true;
    s.known.direct = 0.5 * w;
    s.known_transform = [=](double y) {
      const double z = pi * w * y;
      if (std::abs(z) < 1e-4) return w * (1 - z * z / 3);
      const double sz = std::sin(z) / z;
      return w * sz * sz;
    };
  } else if (name == "fejer") {
    const double w = detail::param(p, 0, 1.0);
    require(w > 0, "fejer: need w > 0");
    auto f = [=](double y) {
      const double z = pi * w * y;
      if (std::abs(z) < 1e-4) return w * (1 - z * z / 3);
      const double sz = std::sin(z) / z;
      return w * sz * sz;
    };
    const double yc = 1 / (pi * w);
    s.eval = f;
    s.value_at_zero = w;
    s.smoothness = Smoothness::cinf;
    s.is_l1 = s.is_l2 = true;
    s.known.direct = 0.5;
    s.known_transform = [=](double x) { return std::max(0.0, 1 - std::abs(x) / w); };
    s.majorant = TailMajorant{[=](double y) { return y < yc ? w : 1 / (pi * pi * w * y * y); },
                              [=](double u) {
                                return u < yc ? w * (yc - u) + 1 / (pi * pi * w * yc) : 1 / (pi * pi * w * u);
                              }};
  } else if (name == "fracpart_over_x") {
    s.eval = [](double x) { return (x - std::floor(x)) / x; };
    s.value_at_zero = 1.0;
    s.breaks = detail::integer_breaks;
    s.smoothness = Smoothness::bv;
    s.is_l2 = true;
  } else if (name == "poly_log_tail") {
    const double q = detail::param(p, 0, 3.0);
    require(q > 0, "poly_log_tail: need p > 0");
    auto f = [=](double x) { return x * std::log1p(x) / std::pow(1 + x, q + 2); };
    auto g = [=](double x) { return std::log1p(x) / std::pow(1 + x, q + 1); };
    const double xs = std::expm1(1 / (q + 1));
    auto gtail = [=](double u) {
      const double t = 1 + u;
      return std::pow(t, -q) * (std::log(t) / q + 1 / (q * q));
    };
    s.eval = f;
    s.smoothness = Smoothness::cinf;
    s.satisfies_c = s.is_l1 = s.is_l2 = true;
    s.known = {1 / (q * q) - 1 / ((q + 1) * (q + 1)), 1 / ((q + 1) * (q + 1))};
    s.majorant = TailMajorant{[=](double x) { return g(std::max(x, xs)); },
                              [=](double u) { return u < xs ? g(xs) * (xs - u) + gtail(xs) : gtail(u); }};
  } else {
    throw std::invalid_argument("unknown function name: " + name);
  }
  if (s.name.empty()) s.name = detail::format_name(name, p);
  return ParityFunction(std::move(s));
}

// Parses "name:p1,p2" (or just "name").
inline ParityFunction parse_function(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad parameter '" + item + "' in " + text);
      }
      if (used != item.size()) throw std::invalid_argument("bad parameter '" + item + "' in " + text);
      params.push_back(v);
    }
  }
  return builtin_function(name, params);
}

// If(x) = f(1/x)/x; swaps the roles of F and K.
inline ParityFunction invert(const ParityFunction& f) {
  FunctionSpec s;
  s.name = "inv(" + f.name() + ")";
  s.parity = f.parity();
  s.eval = [f](double x) { return f.half_line(1 / x) / x; };
  if (f.support() && f.support()->lo > 0) s.support = Interval{1 / f.support()->hi, 1 / f.support()->lo};
  if (f.has_derivative())
    s.derivative = [f](double x) { return -f.derivative(1 / x) / (x * x * x) - f.half_line(1 / x) / (x * x); };
  s.breaks = [f](double lo, double hi) {
    std::vector<double> out;
    if (lo <= 0) return out;
    for (double p : f.breakpoints(1 / hi, 1 / lo)) out.push_back(1 / p);
    std::sort(out.begin(), out.end());
    return out;
  };
  s.smoothness = f.smoothness();
  s.satisfies_c = f.satisfies_c();
  s.is_l1 = s.is_l2 = f.satisfies_c();
  s.known = {f.known_integrals().inverted, f.known_integrals().direct};
  return ParityFunction(std::move(s));
}

// f_lambda(t) = f(t/lambda)/lambda.
inline ParityFunction dilate(const ParityFunction& f, double lambda) {
  detail::require(lambda > 0, "dilate: need lambda > 0");
  FunctionSpec s = f.spec();
  s.name = "dil(" + f.name() + "," + std::to_string(lambda) + ")";
  s.eval = [f, lambda](double t) { return f.half_line(t / lambda) / lambda; };
  if (f.has_derivative())
    s.derivative = [f, lambda](double t) { return f.derivative(t / lambda) / (lambda * lambda); };
  if (f.support()) s.support = Interval{f.support()->lo * lambda, f.support()->hi * lambda};
  s.breaks = [f, lambda](double lo, double hi) {
    std::vector<double> out;
    for (double p : f.breakpoints(lo / lambda, hi / lambda)) out.push_back(p * lambda);
    return out;
  };
  if (s.known.direct) s.known.direct = *s.known.direct;
  if (s.known.inverted) s.known.inverted = *s.known.inverted / lambda;
  s.majorant.reset();
  if (f.known_transform()) s.known_transform = [kt = f.known_transform(), lambda](double y) { return kt(lambda * y); };
  if (s.value_at_zero) s.value_at_zero = *s.value_at_zero / lambda;
  return ParityFunction(std::move(s));
}

// alpha f + beta g for functions of the same parity.
inline ParityFunction combine(double alpha, const ParityFunction& f, double beta, const ParityFunction& g) {
  detail::require(f.parity() == g.parity(), "combine: parity mismatch");
  FunctionSpec s;
  s.name = "comb(" + f.name() + "," + g.name() + ")";
  s.parity = f.parity();
  s.eval = [=](double x) { return alpha * f.half_line(x) + beta * g.half_line(x); };
  if (f.support() && g.support())
    s.support = Interval{std::min(f.support()->lo, g.support()->lo), std::max(f.support()->hi, g.support()->hi)};
  s.breaks = [=](double lo, double hi) {
    auto a = f.breakpoints(lo, hi), b = g.breakpoints(lo, hi);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  s.smoothness = std::min(f.smoothness(), g.smoothness());
  s.satisfies_c = f.satisfies_c() && g.satisfies_c();
  s.is_l1 = f.is_l1() && g.is_l1();
  s.is_l2 = f.is_l2() && g.is_l2();
  if (f.known_integrals().direct && g.known_integrals().direct)
    s.known.direct = alpha * *f.known_integrals().direct + beta * *g.known_integrals().direct;
  if (f.known_integrals().inverted && g.known_integrals().inverted)
    s.known.inverted = alpha * *f.known_integrals().inverted + beta * *g.known_integrals().inverted;
  if (f.tail_majorant() && g.tail_majorant()) {
    auto fm = *f.tail_majorant();
    auto gm = *g.tail_majorant();
    s.majorant = TailMajorant{[=](double x) { return std::abs(alpha) * fm.k(x) + std::abs(beta) * gm.k(x); },
                              [=](double u) { return std::abs(alpha) * fm.tail(u) + std::abs(beta) * gm.tail(u); }};
  }
  return ParityFunction(std::move(s));
}

// Arbitrary evaluator, for families built elsewhere.
inline ParityFunction make_function(std::string name, Parity parity, std::function<double(double)> eval,
                                    bool l1 = true) {
  FunctionSpec s;
  s.name = std::move(name);
  s.parity = parity;
  s.eval = std::move(eval);
  s.is_l1 = l1;
  s.is_l2 = true;
  return ParityFunction(std::move(s));
}

// int_0^inf |f(x)| (1 + 1/x) dx, or DivergenceError.
inline double condition_c_norm(const ParityFunction& f, double tol = 1e-10) {
  auto w = [](double x) { return 1 + 1 / x; };
  if (f.support() && f.support()->lo > 0) {
    const auto& s = *f.support();
    return integrate_adaptive([&](double x) { return std::abs(f.half_line(x)) * w(x); }, f.panels(s.lo, s.hi),
                              tol)
        .value;
  }
  FunctionSpec abs_spec = f.spec();
  abs_spec.eval = [f](double x) { return std::abs(f.half_line(x)); };
  abs_spec.known = {};
  return ParityFunction(std::move(abs_spec)).integrate_weighted(w, tol);
}

}  // namespace copoisson
