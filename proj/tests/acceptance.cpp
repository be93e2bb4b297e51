// Acceptance run: one PASS/FAIL line per criterion. Optional arguments select
// criteria by number. Exit status 0 iff every selected criterion passes.

#include <copoisson/all.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

using namespace copoisson;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_defect(const std::vector<IdentityReport>& rs) {
  double d = 0.0;
  for (const auto& r : rs) d = std::max(d, r.defect);
  return d;
}

Outcome frac_pair() {
  const auto rs = frac_part_pair({0.3, 0.7, 1.5, 2.4}, 1e-3);
  return {all_pass(rs), "max defect " + fmt("%.2e", max_defect(rs)) + " (tol 1e-3)"};
}

Outcome pointwise() {
  const auto b = parse_function("bump:1,2");
  const std::vector<double> xis{0, 0.3, 0.9, 1.7};
  const auto coarse = pointwise_copoisson(b, xis, 50, 1e-3, true);
  const auto fine = pointwise_copoisson(b, xis, 200, 1e-3, false);
  bool ok = true;
  for (std::size_t i = 0; i < xis.size(); ++i) ok = ok && fine[i].pass && fine[i].defect < coarse[i].defect;
  return {ok, "max defect L=200 " + fmt("%.2e", max_defect(fine)) + ", L=50 " + fmt("%.2e", max_defect(coarse)) +
                  " (tol 1e-3, strict decrease)"};
}

Outcome improper() {
  const auto r = improper_F_integral(parse_function("bump:1,2"));
  return {r.pass, "defect " + fmt("%.2e", r.defect) + " (tol 1e-4)"};
}

Outcome muntz() {
  const auto b = parse_function("bump:1,2");
  auto rs = muntz_identity(b, 0.5, {0, 5, 13});
  const auto r8 = muntz_identity(b, 0.8, {0, 5, 13});
  rs.insert(rs.end(), r8.begin(), r8.end());
  return {all_pass(rs), "max defect " + fmt("%.2e", max_defect(rs)) + " over 6 points (tol 1e-6)"};
}

Outcome zeta_engine() {
  const std::size_t N = 10'000'000;
  long double s = 0.0L;
  for (std::size_t n = N; n >= 1; --n) s += 1.0L / (static_cast<long double>(n) * n);
  const double dN = static_cast<double>(N);
  const double tail = 1 / dN - 0.5 / (dN * dN) + 1 / (6 * dN * dN * dN);
  const double z2 = zeta(2.0).value.real();
  const double d_raw = std::abs(z2 - static_cast<double>(s));
  const double d_series = std::abs(z2 - static_cast<double>(s) - tail);
  double fe = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx sv(0.05 + 0.045 * i, -30 + 3.1 * i);
    const cplx a = zeta(sv).value, c = chi(sv) * zeta(1.0 - sv).value;
    fe = std::max(fe, std::abs(a - c) / std::abs(a));
  }
  return {d_raw <= 1e-7 && d_series <= 1e-7 && fe <= 1e-8,
          "zeta(2) vs partial sum " + fmt("%.4e", d_raw) + ", vs sum+tail " + fmt("%.2e", d_series) +
              " (tol 1e-7), functional eq " + fmt("%.2e", fe) + " (tol 1e-8)"};
}

Outcome vp() {
  const auto r = vp_zeta_pairing(gaussian_test());
  return {r.pass && r.defect <= 1e-5, "defect " + fmt("%.2e", r.defect) + " (tol 1e-5)"};
}

Outcome sonine() {
  const EntireMellin A(solve_phi(1.0, SonineSign::plus, 64));
  const auto& sol = A.solution();
  double sym = 0.0;
  for (int k = 0; k < 10; ++k) {
    const cplx s(0.1 + 0.08 * k, -9 + 2.1 * k);
    const cplx v = A(s);
    sym = std::max(sym, std::abs(v - A(1.0 - s)) / (1 + std::abs(v)));
  }
  double im = 0.0;
  for (double t : {1.0, 5.0, 10.0}) {
    const cplx v = A(cplx(0.5, t));
    im = std::max(im, std::abs(v.imag()) / (1 + std::abs(v)));
  }
  const bool ok = sol.residual_inf <= 1e-10 && sol.op_norm_estimate < 1 && sym <= 1e-6 && im <= 1e-8;
  return {ok, "residual " + fmt("%.2e", sol.residual_inf) + ", op norm " + fmt("%.6f", sol.op_norm_estimate) +
                  ", symmetry " + fmt("%.2e", sym) + ", Im on line " + fmt("%.2e", im)};
}

Outcome zeros() {
  const EntireMellin A(solve_phi(1.0, SonineSign::plus, 64));
  const auto z = critical_line_zeros(A, 50.0);
  bool bracketed = true;
  for (const auto& c : z.zeros)
    bracketed = bracketed && A.critical_scalar(c.t - 1e-9) * A.critical_scalar(c.t + 1e-9) <= 0;
  const bool band = z.asymptotic_ratio >= 0.5 && z.asymptotic_ratio <= 1.5;
  return {bracketed && band, std::to_string(z.count_T) + " zeros, sign changes verified: " +
                                 (bracketed ? "yes" : "no") + ", ratio " + fmt("%.3f", z.asymptotic_ratio) +
                                 " (band [0.5, 1.5]), refined count " + fmt("%.2f", z.refined_prediction)};
}

Outcome gallery() {
  bool ok = true;
  double support = 0.0, recip = 0.0;
  int l2_fail = 0;
  std::vector<GalleryFunction> fams;
  for (auto f : {GalleryFamily::even_fa, GalleryFamily::odd_fa, GalleryFamily::odd_ga, GalleryFamily::odd_ka})
    fams.emplace_back(f, GalleryParams{0.5, 1});
  fams.emplace_back(GalleryFamily::qn, GalleryParams{0.5, 1});
  for (const auto& f : fams) {
    const auto s = verify_support(f);
    support = std::max(support, max_defect(s));
    std::vector<double> ys{0.7, 0.8, 1.3};
    if (f.family() == GalleryFamily::qn) ys = {0.1, 0.3, 0.5};
    const auto r = verify_reciprocity(f, ys, 5e-3);
    recip = std::max(recip, max_defect(r));
    const auto l = l2_truncation(f);
    if (!l.pass) ++l2_fail;
    ok = ok && all_pass(s) && all_pass(r) && l.pass;
  }
  return {ok, "support max " + fmt("%.1g", support) + " (tol 0), reciprocity max " + fmt("%.2e", recip) +
                  " (tol 5e-3), L2 non-contracting families " + std::to_string(l2_fail)};
}

Outcome kahane() {
  const auto cb = parse_function("cbump:0.25");
  std::vector<double> xs;
  for (int i = 0; i < 21; ++i) xs.push_back(-0.25 + 0.5 * (i + 0.5) / 21);
  const auto rs = kahane_pair(cb, cb, xs, {0.1, 0.3, 0.7, 1.2, 2.5}, 1e-8);
  return {all_pass(rs), "support max " + fmt("%.1g", std::max(rs[0].defect, rs[1].defect)) +
                            ", transform max " + fmt("%.2e", max_defect(rs)) + " (tol 1e-8)"};
}

Outcome l2() {
  const auto f = parse_function("bump:1,2"), phi = parse_function("bump:0.5,3");
  const auto d = l2_muntz_D(f, phi);
  const auto s = l2_muntz_symmetry(f, phi);
  return {d.defect <= 1e-6 && s.defect <= 1e-5,
          "direct vs derivative form " + fmt("%.2e", d.defect) + " (tol 1e-6), symmetry " + fmt("%.2e", s.defect) + " (tol 1e-5)"};
}

Outcome refinement() {
  const auto rows = refinement_suite();
  int failed = 0;
  std::string first;
  for (const auto& r : rows)
    if (!r.check.pass) {
      if (!failed) first = ", first failure " + r.function + " " + r.ladder;
      ++failed;
    }
  return {failed == 0, std::to_string(rows.size()) + " ladders, " + std::to_string(failed) + " failed" + first};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "fractional-part pair", 10, frac_pair},
      {2, "co-Poisson pointwise", 30, pointwise},
      {3, "improper integral of F", 10, improper},
      {4, "Muntz identity", 20, muntz},
      {5, "zeta engine", 5, zeta_engine},
      {6, "principal-value pairing", 20, vp},
      {7, "Sonine solve and symmetry", 60, sonine},
      {8, "critical-line zeros", 300, zeros},
      {9, "gallery", 120, gallery},
      {10, "Kahane pair", 10, kahane},
      {11, "L2 Muntz pairings", 30, l2},
      {12, "refinement suite", 0, refinement},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s <= 0 || secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    const std::string limit = c.budget_s > 0 ? "limit " + fmt("%.0f", c.budget_s) + " s" : "no limit";
    std::printf("%s criterion %2d %s: %s; %.2f s (%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, limit.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
