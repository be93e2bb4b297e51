#pragma once

// Identity reports, refinement checks, CSV/JSON serialization.

#include <copoisson/integrate.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace copoisson {

struct IdentityReport {
  std::string kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  cplx lhs{};
  cplx rhs{};
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline IdentityReport make_report(std::string kind, nlohmann::ordered_json params, cplx lhs, cplx rhs,
                                  double tol) {
  IdentityReport r;
  r.kind = std::move(kind);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.defect = std::abs(lhs - rhs);
  r.tolerance = tol;
  r.pass = r.defect <= tol;
  return r;
}

// Defects along a refinement ladder: each step may grow by at most a factor
// of two above the noise floor.
struct RefinementCheck {
  std::vector<double> params;
  std::vector<double> defects;
  double noise_floor = 0.0;
  bool pass = true;
};

inline RefinementCheck refinement_check(std::vector<double> params, std::vector<double> defects,
                                        double noise_floor) {
  RefinementCheck c{std::move(params), std::move(defects), noise_floor, true};
  for (std::size_t i = 1; i < c.defects.size(); ++i)
    if (!(c.defects[i] <= 2 * c.defects[i - 1] + noise_floor)) c.pass = false;
  return c;
}

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline const char* csv_header() { return "kind,param_json,lhs_re,lhs_im,rhs_re,rhs_im,defect,tol,pass"; }

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv_row(const IdentityReport& r) {
  return r.kind + "," + csv_quote(r.params.dump()) + "," + format_double(r.lhs.real()) + "," +
         format_double(r.lhs.imag()) + "," + format_double(r.rhs.real()) + "," + format_double(r.rhs.imag()) + "," +
         format_double(r.defect) + "," + format_double(r.tolerance) + "," + (r.pass ? "true" : "false");
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["params"] = r.params;
  j["lhs_re"] = r.lhs.real();
  j["lhs_im"] = r.lhs.imag();
  j["rhs_re"] = r.rhs.real();
  j["rhs_im"] = r.rhs.imag();
  j["defect"] = r.defect;
  j["tol"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

inline void write_csv(std::ostream& os, const std::vector<IdentityReport>& rows, bool header = true) {
  if (header) os << csv_header() << '\n';
  for (const auto& r : rows) os << to_csv_row(r) << '\n';
}

inline bool all_pass(const std::vector<IdentityReport>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

}  // namespace copoisson
