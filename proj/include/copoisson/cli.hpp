#pragma once

// Command-line dispatch. run() parses argv, runs one verifier and streams its
// reports as CSV or JSON. Exit status: 0 all reports pass, 1 a report failed
// or a numerical error stopped the run, 2 bad usage.

#include <copoisson/all.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace copoisson::cli {

// "2", "0.5+14.1i", "-1-2i", "3i".
inline cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ConfigError("empty complex number");
  auto num = [&](const std::string& v) {
    if (v.empty() || v == "+") return 1.0;
    if (v == "-") return -1.0;
    return detail::parse_number("complex '" + text + "'", v);
  };
  if (s.back() != 'i' && s.back() != 'j') return {num(s), 0.0};
  s.pop_back();
  std::size_t k = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      k = i;
      break;
    }
  if (k == std::string::npos) return {0.0, num(s)};
  return {num(s.substr(0, k)), num(s.substr(k))};
}

// Single writer for one command's reports; remembers the first failure.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  void write(const IdentityReport& r) {
    if (format_ == "csv") {
      if (!header_) out_ << csv_header() << '\n';
      header_ = true;
      out_ << to_csv_row(r) << '\n';
    } else {
      json_.push_back(to_json(r));
    }
    if (!r.pass && !first_fail_) first_fail_ = r;
  }
  void write(const std::vector<IdentityReport>& rs) {
    for (const auto& r : rs) write(r);
  }

  void finish() {
    if (format_ == "json") out_ << json_.dump(2) << '\n';
    else if (!header_) out_ << csv_header() << '\n';
    out_.flush();
  }

  const std::optional<IdentityReport>& first_failure() const { return first_fail_; }

 private:
  std::ostream& out_;
  std::string format_;
  bool header_ = false;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::array();
  std::optional<IdentityReport> first_fail_;
};

inline std::vector<double> kahane_default_grid(double a) {
  std::vector<double> xs;
  for (int i = 0; i < 11; ++i) xs.push_back(-a + 2 * a * (i + 0.5) / 11);
  return xs;
}

inline std::vector<double> gallery_default_ys(const GalleryFunction& g) {
  if (g.family() == GalleryFamily::qn) return {0.2 * g.gap(), 0.5 * g.gap(), 0.8 * g.gap()};
  const double a = g.params().a;
  return {1.4 * a, 1.6 * a, 2.6 * a};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Co-Poisson, Muntz and Sonine identity verifiers", "copoisson"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv", config_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path, "key=value overrides (default: $COPOISSON_CONFIG)");

  std::string fspec = "bump:1,2", gspec, phispec = "bump:0.5,3", xis = "0,0.3,0.9", ys, vs, taus = "0,5,13";
  std::string xs_text;
  double lambda = 200, delta = 0.2, sigma = 0.5, center = 0.0, a = 1.0, T = 50;
  std::optional<double> tol;
  std::string s_text, side = "left", sign = "plus", name;
  std::size_t nodes = 64;
  int N = 1;
  bool sin_variant = false;

  auto* check = app.add_subcommand("check", "Pointwise co-Poisson: truncated transform of F against K(xi)");
  check->add_option("--f", fspec, "Function specifier, e.g. bump:1,2");
  check->add_option("--xi", xis, "Comma-separated xi values");
  check->add_option("--lambda", lambda, "Truncation Lambda")->check(CLI::PositiveNumber);
  check->add_option("--tol", tol, "Report tolerance");

  auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet value of K at xi against its one-sided mean");
  dirichlet->add_option("--f", fspec, "Function specifier");
  dirichlet->add_option("--xi", xis, "Comma-separated xi values");
  dirichlet->add_option("--delta", delta, "Half width of the window")->check(CLI::PositiveNumber);
  dirichlet->add_option("--tol", tol, "Report tolerance");

  auto* kahane = app.add_subcommand("kahane", "Kahane pair: support zeros and transform match");
  std::string kf = "cbump:0.25", kg = "cbump:0.25";
  kahane->add_option("--f", kf, "Even function supported in [-b, b], b < 1/2");
  kahane->add_option("--g", kg, "Even function supported in [-b, b], b < 1/2");
  kahane->add_option("--x", xs_text, "Support sample points inside (-a, a)");
  kahane->add_option("--y", ys, "Transform sample points");
  kahane->add_option("--tol", tol, "Report tolerance");

  auto* duffin = app.add_subcommand("duffin", "Duffin's odd pair");
  std::string df = "odd_bump:1,2";
  duffin->add_option("--f", df, "Odd function supported away from 0");
  duffin->add_option("--y", ys, "Sample points");
  duffin->add_option("--tol", tol, "Report tolerance");

  auto* muntz = app.add_subcommand("muntz", "Muntz-type identities");
  muntz->require_subcommand(1);
  auto* mcheck = muntz->add_subcommand("check", "Mellin transform of A_f against zeta(s) times that of f");
  auto* mco = muntz->add_subcommand("comuntz", "Right Mellin transform of K against zeta(s) times that of f");
  for (auto* c : {mcheck, mco}) {
    c->add_option("--f", fspec, "Function specifier");
    c->add_option("--sigma", sigma, "Re s, in (0, 1)");
    c->add_option("--tau", taus, "Comma-separated Im s values");
    c->add_option("--tol", tol, "Report tolerance");
  }
  auto* mvp = muntz->add_subcommand("vp", "Principal-value pairing of zeta on Re s = 1 with a gaussian test");
  mvp->add_option("--center", center, "Center of the gaussian test function");
  mvp->add_option("--tol", tol, "Report tolerance");
  auto* ml2 = muntz->add_subcommand("l2", "L2 Muntz distribution: two pairings and the f <-> f~ symmetry");
  ml2->add_option("--f", fspec, "Function specifier");
  ml2->add_option("--phi", phispec, "Test function specifier");

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(s)");
  zeta_cmd->add_option("--s", s_text, "Complex argument, e.g. 0.5+14.1i")->required();

  auto* chi_cmd = app.add_subcommand("chi", "chi(s) = zeta(s)/zeta(1-s)");
  chi_cmd->add_option("--s", s_text, "Complex argument")->required();
  chi_cmd->add_flag("--sin", sin_variant, "Odd analogue chi_sin");

  auto* mellin_cmd = app.add_subcommand("mellin", "Mellin transform of f on a vertical line");
  mellin_cmd->add_option("--f", fspec, "Function specifier");
  mellin_cmd->add_option("--sigma", sigma, "Re s");
  mellin_cmd->add_option("--tau", taus, "Comma-separated Im s values");
  mellin_cmd->add_option("--side", side, "left: x^(s-1), right: x^(-s)")->check(CLI::IsMember({"left", "right"}));

  auto* sonine = app.add_subcommand("sonine", "Sonine-space constructions");
  sonine->require_subcommand(1);
  auto* ssolve = sonine->add_subcommand("solve", "Solve for phi_a and locate critical-line zeros");
  ssolve->add_option("--a", a, "Gap half width")->check(CLI::PositiveNumber);
  ssolve->add_option("--sign", sign, "plus (calA) or minus (calB)")->check(CLI::IsMember({"plus", "minus"}));
  ssolve->add_option("--nodes,--n", nodes, "Gauss-Legendre nodes")->check(CLI::Range(16, 4096));
  ssolve->add_option("--zeros-upto,--T", T, "Zero search height (0 skips the search)")->check(CLI::NonNegativeNumber);

  auto* gallery = app.add_subcommand("gallery", "Functions vanishing with their transforms on a gap");
  gallery->require_subcommand(1);
  auto* gverify = gallery->add_subcommand("verify", "Support zeros, reciprocity and L2 truncation");
  gverify->add_option("--name", name, "even_fa, odd_fa, odd_ga, odd_ka or qn")->required();
  auto* a_opt = gverify->add_option("--a", a, "Lattice parameter, 0 < a < 1");
  auto* n_opt = gverify->add_option("--N", N, "qn degree")->check(CLI::NonNegativeNumber);
  a_opt->excludes(n_opt);
  gverify->add_option("--y", ys, "Reciprocity sample points");
  gverify->add_option("--tol", tol, "Reciprocity tolerance");

  auto* fracpair = app.add_subcommand("fracpair", "Abel transform of {u}/u against its closed form");
  fracpair->add_option("--v", vs, "Comma-separated positive non-integers");
  fracpair->add_option("--tol", tol, "Report tolerance");

  auto* refine = app.add_subcommand("refine", "Refinement ladders over builtin functions");
  std::string specs;
  refine->add_option("--f", specs, "Semicolon-separated function specifiers (default: all builtins)");

  RunConfig cfg;
  try {
    app.parse(argc, argv);
    read_config_env(cfg);
    if (!config_path.empty()) read_config_file(config_path, cfg);
    cfg.output = format;
    apply(cfg);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  ReportWriter w(out, format);
  try {
    auto list = [](const std::string& s, const std::string& what, std::vector<double> dflt) {
      return s.empty() ? dflt : parse_list(s, what);
    };
    if (*check) {
      const auto f = parse_function(fspec);
      w.write(pointwise_copoisson(f, parse_list(xis, "--xi"), lambda, tol.value_or(1e-3)));
    } else if (*dirichlet) {
      const auto f = parse_function(fspec);
      for (double xi : parse_list(xis, "--xi")) {
        const auto dp = dirichlet_point_value(f, xi, delta);
        const double h = 1e-9 * std::max(1.0, std::abs(xi));
        const double mean = 0.5 * (eval_K(f, std::abs(xi - h)) + eval_K(f, std::abs(xi + h)));
        nlohmann::ordered_json p;
        p["f"] = f.name();
        p["xi"] = xi;
        p["delta"] = delta;
        p["lambdas"] = dp.lambdas;
        p["err_estimate"] = dp.err_estimate;
        w.write(make_report("dirichlet_value", p, dp.value, mean, tol.value_or(1e-6)));
      }
    } else if (*kahane) {
      const auto f = parse_function(kf), g = parse_function(kg);
      const double b = make_kahane_pair(f, g).b;
      w.write(kahane_pair(f, g, list(xs_text, "--x", kahane_default_grid(0.5 - b)),
                          list(ys, "--y", {0.1, 0.3, 0.7, 1.2, 2.5}), tol.value_or(1e-8)));
    } else if (*duffin) {
      w.write(duffin_pair(parse_function(df), list(ys, "--y", {0.4, 0.7, 1.3}), tol.value_or(1e-6)));
    } else if (*mcheck) {
      w.write(muntz_identity(parse_function(fspec), sigma, parse_list(taus, "--tau"), tol.value_or(1e-6)));
    } else if (*mco) {
      w.write(comuntz_identity(parse_function(fspec), sigma, parse_list(taus, "--tau"), tol.value_or(1e-6)));
    } else if (*mvp) {
      w.write(vp_zeta_pairing(gaussian_test(center), {0.2, 0.1, 0.05, 0.025}, tol.value_or(1e-5)));
    } else if (*ml2) {
      const auto f = parse_function(fspec), phi = parse_function(phispec);
      w.write(l2_muntz_D(f, phi));
      w.write(l2_muntz_symmetry(f, phi));
    } else if (*zeta_cmd) {
      const cplx s = parse_complex(s_text);
      const auto z = zeta(s);
      if (format == "csv") {
        out << "s_re,s_im,re,im,err\n"
            << format_double(s.real()) << ',' << format_double(s.imag()) << ',' << format_double(z.value.real())
            << ',' << format_double(z.value.imag()) << ',' << format_double(z.err_estimate) << '\n';
      } else {
        nlohmann::ordered_json j{{"s_re", s.real()}, {"s_im", s.imag()},          {"re", z.value.real()},
                                 {"im", z.value.imag()}, {"err", z.err_estimate}, {"N", z.N_used}};
        out << j.dump(2) << '\n';
      }
      return 0;
    } else if (*chi_cmd) {
      const cplx s = parse_complex(s_text);
      const cplx c = sin_variant ? chi_sin(s) : chi(s);
      if (format == "csv") {
        out << "s_re,s_im,re,im\n"
            << format_double(s.real()) << ',' << format_double(s.imag()) << ',' << format_double(c.real()) << ','
            << format_double(c.imag()) << '\n';
      } else {
        nlohmann::ordered_json j{{"s_re", s.real()}, {"s_im", s.imag()}, {"re", c.real()}, {"im", c.imag()}};
        out << j.dump(2) << '\n';
      }
      return 0;
    } else if (*mellin_cmd) {
      const auto v = mellin_line(parse_function(fspec), sigma, parse_list(taus, "--tau"),
                                 side == "left" ? MellinSide::left : MellinSide::right);
      if (format == "csv") {
        out << "side,sigma,tau,re,im,err\n";
        for (std::size_t i = 0; i < v.tau.size(); ++i)
          out << to_string(v.side) << ',' << format_double(v.sigma) << ',' << format_double(v.tau[i]) << ','
              << format_double(v.values[i].real()) << ',' << format_double(v.values[i].imag()) << ','
              << format_double(v.err[i]) << '\n';
      } else {
        auto j = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < v.tau.size(); ++i)
          j.push_back({{"side", to_string(v.side)},
                       {"sigma", v.sigma},
                       {"tau", v.tau[i]},
                       {"re", v.values[i].real()},
                       {"im", v.values[i].imag()},
                       {"err", v.err[i]}});
        out << j.dump(2) << '\n';
      }
      return 0;
    } else if (*ssolve) {
      const auto sgn = sign == "plus" ? SonineSign::plus : SonineSign::minus;
      const EntireMellin F(solve_phi(a, sgn, nodes));
      nlohmann::ordered_json j;
      j["a"] = a;
      j["sign"] = sign;
      j["nodes"] = nodes;
      j["residual"] = F.solution().residual_inf;
      j["op_norm"] = F.solution().op_norm_estimate;
      if (T > 0) {
        const auto z = critical_line_zeros(F, T, cfg.zero_grid_dt);
        j["T"] = T;
        j["dt"] = z.dt;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : z.zeros) arr.push_back({{"t", c.t}, {"residual", c.residual}});
        j["zeros"] = arr;
        j["count"] = z.count_T;
        j["ratio"] = z.asymptotic_ratio;
        j["refined_prediction"] = z.refined_prediction;
      }
      out << j.dump(2) << '\n';
      return 0;
    } else if (*gverify) {
      const auto fam = parse_family(name);
      GalleryParams gp;
      if (fam == GalleryFamily::qn) {
        if (a_opt->count()) throw ConfigError("qn takes --N, not --a");
        gp.N = N;
      } else {
        if (n_opt->count()) throw ConfigError(name + " takes --a, not --N");
        gp.a = a_opt->count() ? a : 0.5;
      }
      const GalleryFunction g(fam, gp);
      std::vector<double> ladder = cfg.abel_ladder_set ? cfg.abel_ladder : std::vector<double>{};
      w.write(verify_support(g));
      w.write(verify_reciprocity(g, list(ys, "--y", gallery_default_ys(g)), tol.value_or(5e-3), ladder));
      w.write(l2_truncation(g));
    } else if (*fracpair) {
      w.write(frac_part_pair(list(vs, "--v", {0.3, 0.7, 1.5, 2.4}), tol.value_or(1e-3), default_abel_ladder()));
    } else if (*refine) {
      std::vector<std::string> names;
      if (specs.empty()) names = builtin_specs();
      else {
        std::stringstream ss(specs);
        for (std::string item; std::getline(ss, item, ';');) names.push_back(detail::trim(item));
      }
      for (const auto& row : refinement_suite(names)) w.write(to_report(row));
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    w.finish();
    err << "failed: " << e.what() << '\n';
    return 1;
  }
  w.finish();
  if (const auto& f = w.first_failure()) {
    err << "FAIL " << f->kind << ' ' << f->params.dump() << " defect " << format_double(f->defect) << " tol "
        << format_double(f->tolerance) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace copoisson::cli
