#include <copoisson/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace copoisson;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "copoisson");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  apply(RunConfig{});
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Config, ParsesKeys) {
  RunConfig c;
  std::istringstream in("# comment\nquad.tol = 1e-9\nseries.nmax=1000\nzero.grid_dt = 0.1\nabel.ladder = 0.1,0.05,0.02\n");
  read_config(in, c);
  EXPECT_EQ(c.quad_tol, 1e-9);
  EXPECT_EQ(c.series_nmax, 1000u);
  EXPECT_EQ(c.zero_grid_dt, 0.1);
  EXPECT_EQ(c.abel_ladder, (std::vector<double>{0.1, 0.05, 0.02}));
  EXPECT_TRUE(c.abel_ladder_set);
}

TEST(Config, RejectsBadInput) {
  for (const char* text : {"quad.tol = -1\n", "nokey = 3\n", "abel.ladder = 0.1,0.2,0.3\n", "series.nmax = 2.5\n",
                           "just text\n", "quad.tol = 1e-9x\n"}) {
    RunConfig c;
    std::istringstream in(text);
    EXPECT_THROW(read_config(in, c), ConfigError) << text;
  }
}

TEST(Config, ApplySetsDefaults) {
  RunConfig c;
  c.quad_tol = 1e-8;
  c.series_nmax = 77;
  apply(c);
  EXPECT_EQ(default_quad_tol(), 1e-8);
  EXPECT_EQ(SumOptions{}.n_cap, 77u);
  apply(RunConfig{});
  EXPECT_EQ(default_quad_tol(), 1e-10);
}

TEST(Cli, ParseComplex) {
  EXPECT_EQ(cli::parse_complex("2+0i"), cplx(2, 0));
  EXPECT_EQ(cli::parse_complex("0.5-14i"), cplx(0.5, -14));
  EXPECT_EQ(cli::parse_complex("-3i"), cplx(0, -3));
  EXPECT_EQ(cli::parse_complex("1e-3+2e+1i"), cplx(1e-3, 20));
  EXPECT_EQ(cli::parse_complex("7"), cplx(7, 0));
  EXPECT_THROW(cli::parse_complex("abc"), ConfigError);
}

TEST(Cli, CheckExample) {
  const auto r = run({"check", "--f", "bump:1,2", "--xi", "0,0.3,0.9", "--lambda", "200"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 4);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), csv_header());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"muntz", "check", "--f", "bump:1,2", "--tau", "0,5"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ZetaExample) {
  const auto r = run({"zeta", "--s", "2+0i"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.64493406684822"), std::string::npos) << r.out;
}

TEST(Cli, GalleryExample) {
  const auto r = run({"gallery", "verify", "--name", "even_fa", "--a", "0.5"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, FailingReportNamed) {
  const auto r = run({"check", "--f", "bump:1,2", "--xi", "0.3", "--lambda", "10", "--tol", "1e-12"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("pointwise_copoisson"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "--lambda", "nope"}).code, 2);
  EXPECT_EQ(run({"check", "--f", "nosuch"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"gallery", "verify", "--name", "qn", "--a", "0.5"}).code, 2);
  EXPECT_EQ(run({"--config", "/nonexistent/file", "zeta", "--s", "2"}).code, 2);
}

TEST(Cli, JsonOutput) {
  const auto r = run({"--format", "json", "fracpair", "--v", "0.7"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["kind"], "frac_part_pair");
  EXPECT_TRUE(j[0]["pass"].get<bool>());
}

TEST(Cli, ConfigFileOverrides) {
  const std::string path = ::testing::TempDir() + "copoisson_test.cfg";
  {
    std::ofstream f(path);
    f << "zero.grid_dt = 0.1\n";
  }
  const auto r = run({"--config", path, "sonine", "solve", "--a", "1", "--zeros-upto", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["dt"].get<double>(), 0.1);
  EXPECT_LE(j["residual"].get<double>(), 1e-10);
  EXPECT_EQ(j["count"].get<std::size_t>(), j["zeros"].size());
}

TEST(Cli, SliceCsv) {
  const auto r = run({"mellin", "--f", "gaussian", "--sigma", "0.5", "--tau", "-1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "side,sigma,tau,re,im,err");
  EXPECT_EQ(count_lines(r.out), 3);
}
