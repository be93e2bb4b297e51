#pragma once

// Run configuration: key=value overrides read from a file (COPOISSON_CONFIG)
// and applied to the process-wide defaults.

#include <copoisson/quad.hpp>
#include <copoisson/sums.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace copoisson {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double quad_tol = 1e-10;
  std::size_t series_nmax = 10'000'000;
  double zero_grid_dt = 0.05;
  std::vector<double> abel_ladder{0.04, 0.02, 0.01, 0.005};
  bool abel_ladder_set = false;
  std::string output = "csv";
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + v + "'");
  }
  if (used != v.size()) throw ConfigError(key + ": trailing characters in '" + v + "'");
  return x;
}

}  // namespace detail

// Comma-separated list of doubles.
inline std::vector<double> parse_list(const std::string& text, const std::string& what = "list") {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(detail::parse_number(what, detail::trim(item)));
  if (out.empty()) throw ConfigError(what + ": empty list");
  return out;
}

inline void validate(const RunConfig& c) {
  if (!(c.quad_tol > 0)) throw ConfigError("quad.tol must be > 0");
  if (c.series_nmax < 1) throw ConfigError("series.nmax must be >= 1");
  if (!(c.zero_grid_dt > 0)) throw ConfigError("zero.grid_dt must be > 0");
  if (c.abel_ladder.size() < 3) throw ConfigError("abel.ladder needs at least 3 values");
  for (std::size_t i = 0; i < c.abel_ladder.size(); ++i) {
    if (!(c.abel_ladder[i] > 0)) throw ConfigError("abel.ladder values must be > 0");
    if (i && !(c.abel_ladder[i] < c.abel_ladder[i - 1])) throw ConfigError("abel.ladder must decrease");
  }
  if (c.output != "csv" && c.output != "json") throw ConfigError("output must be csv or json");
}

// Lines "key = value"; '#' starts a comment.
inline void read_config(std::istream& in, RunConfig& c) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string val = detail::trim(line.substr(eq + 1));
    if (key == "quad.tol") {
      c.quad_tol = detail::parse_number(key, val);
    } else if (key == "series.nmax") {
      const double n = detail::parse_number(key, val);
      if (!(n >= 1) || n != std::floor(n)) throw ConfigError("series.nmax must be a positive integer");
      c.series_nmax = static_cast<std::size_t>(n);
    } else if (key == "zero.grid_dt") {
      c.zero_grid_dt = detail::parse_number(key, val);
    } else if (key == "abel.ladder") {
      c.abel_ladder = parse_list(val, key);
      c.abel_ladder_set = true;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  validate(c);
}

inline void read_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  read_config(in, c);
}

// Reads $COPOISSON_CONFIG when set.
inline void read_config_env(RunConfig& c) {
  if (const char* p = std::getenv("COPOISSON_CONFIG"); p && *p) read_config_file(p, c);
}

inline void apply(const RunConfig& c) {
  validate(c);
  default_quad_tol() = c.quad_tol;
  default_series_nmax() = c.series_nmax;
  default_abel_ladder() = c.abel_ladder;
}

}  // namespace copoisson
