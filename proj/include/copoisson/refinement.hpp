#pragma once

// Refinement ladders over the builtin functions: each defect may grow by at
// most a factor of two (plus a noise floor) when the discretization parameter
// is refined.

#include <copoisson/copoisson.hpp>
#include <copoisson/mellin.hpp>

#include <string>
#include <vector>

namespace copoisson {

struct RefinementRow {
  std::string function;
  std::string ladder;  // "abel_eps" or "copoisson_lambda"
  double point = 0.0;
  RefinementCheck check;
};

inline std::vector<std::string> builtin_specs() {
  return {"zero",      "gaussian",      "x2_gaussian", "x_gaussian", "bump:1,2", "odd_bump:1,2",    "cbump:1",
          "indicator:1,2", "triangle:1,2", "tent:1",   "fejer:1",    "poly_log_tail:3", "fracpart_over_x"};
}

inline IdentityReport to_report(const RefinementRow& r) {
  nlohmann::ordered_json p;
  p["f"] = r.function;
  p["ladder"] = r.ladder;
  p["point"] = r.point;
  p["params"] = r.check.params;
  p["defects"] = r.check.defects;
  const double last = r.check.defects.empty() ? 0.0 : r.check.defects.back();
  auto rep = make_report("refinement", p, last, 0.0, INFINITY);
  rep.tolerance = r.check.noise_floor;
  rep.pass = r.check.pass;
  return rep;
}

// Damped transforms against the exact transform (or the known pair for
// {u}/u) along a decreasing eps ladder.
inline RefinementRow abel_refinement(const ParityFunction& f, double xi,
                                     const std::vector<double>& eps = {0.04, 0.02, 0.01, 0.005}) {
  const Kernel kern = f.parity() == Parity::even ? Kernel::cosine : Kernel::sine;
  double ref = 0.0;
  if (f.name() == "fracpart_over_x") ref = -(xi - std::floor(xi)) / xi + fracpart_tail_integral(xi);
  else if (f.known_transform()) ref = f.known_transform()(xi);
  else ref = transform(f, xi, 1e-12);
  std::vector<double> d;
  for (double e : eps) d.push_back(std::abs(damped_transform(f, xi, e, kern) - ref));
  return {f.name(), "abel_eps", xi, refinement_check(eps, d, 1e-9)};
}

// Truncated transform of F against K(xi) along an increasing Lambda ladder.
inline RefinementRow copoisson_refinement(const ParityFunction& f, double xi,
                                          const std::vector<double>& lambdas = {25, 50, 100, 200}) {
  std::vector<double> d;
  for (double L : lambdas) d.push_back(pointwise_copoisson(f, {xi}, L, 1.0, false).front().defect);
  return {f.name(), "copoisson_lambda", xi, refinement_check(lambdas, d, 1e-9)};
}

// The co-Poisson ladder applies when int f(v)/v dv is finite and the support
// is compact away from 0 (or the sums converge quickly, as for x2_gaussian).
inline bool copoisson_applicable(const ParityFunction& f) {
  if (f.parity() != Parity::even) return false;
  if (f.name() == "zero" || f.name() == "x2_gaussian") return true;
  return f.support() && f.support()->lo > 0;
}

inline std::vector<RefinementRow> refinement_suite(const std::vector<std::string>& specs = builtin_specs(),
                                                   const std::vector<double>& points = {0.3, 0.9}) {
  std::vector<RefinementRow> out;
  for (const auto& s : specs) {
    const auto f = parse_function(s);
    for (double xi : points) {
      out.push_back(abel_refinement(f, xi));
      if (copoisson_applicable(f)) out.push_back(copoisson_refinement(f, xi));
    }
  }
  return out;
}

}  // namespace copoisson
