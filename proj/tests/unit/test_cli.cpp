#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "logbessel_cli/cli.hpp"

using logbessel::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> v;
  std::istringstream is(line);
  for (std::string cell; std::getline(is, cell, ',');) v.push_back(std::strtod(cell.c_str(), nullptr));
  return v;
}

}  // namespace

TEST(CliFormat, SeventeenSignificantDigits) {
  EXPECT_EQ(logbessel::cli::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(logbessel::cli::format_number(1.0), "1");
  EXPECT_EQ(logbessel::cli::format_number(-2.5e-300), "-2.5e-300");  // printf %.17g
  EXPECT_EQ(logbessel::cli::format_number(INFINITY), "inf");
}

TEST(CliEval, TextAndCsv) {
  const Outcome text = invoke({"eval", "--nu", "200", "--z", "1"});
  ASSERT_EQ(text.code, 0) << text.err;
  // log K_200(1) = 995.8687024798649464 (integral oracle and mpmath).
  EXPECT_NE(text.out.find("995.868702479864"), std::string::npos) << text.out;

  const Outcome csv = invoke({"eval", "--function", "logk-scaled", "--nu", "0.5,1.5", "--z", "1,2", "--output", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  const auto ls = lines(csv.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "nu,z,value");
  EXPECT_NEAR(fields(ls[1])[2], 0.5 * std::log(M_PI / 2.0), 1e-15);
}

TEST(CliEval, LogI) {
  const Outcome r = invoke({"eval", "--function", "logi", "--nu", "0.5", "--z", "1", "--output", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(fields(lines(r.out)[1])[2], std::log(std::sqrt(2.0 / M_PI) * std::sinh(1.0)), 1e-15);
}

TEST(CliEval, Deterministic) {
  const std::vector<std::string> args{"eval", "--nu", "0,3.3,77", "--z", "0.01,5,600", "--output", "csv"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliRegionMap, OverflowBracketColumns) {
  const Outcome r = invoke({"region-map", "--float-system", "double", "--kind", "overflow", "--z-min", "0.01",
                            "--z-max", "100", "--z-steps", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 51u);
  EXPECT_EQ(ls[0], "z,nu_sufficient,nu_empirical,nu_necessary");
  std::vector<double> prev;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_LT(f[1], f[2]);
    EXPECT_LT(f[2], f[3]);
    if (!prev.empty()) {
      for (int c = 0; c < 4; ++c) EXPECT_GT(f[c], prev[c]) << i << ' ' << c;
    }
    prev = f;
  }
}

TEST(CliRegionMap, UnderflowHeaderAndFile) {
  const std::string path = ::testing::TempDir() + "logbessel_region.csv";
  const Outcome r = invoke({"region-map", "--float-system", "single", "--kind", "underflow", "--nu-steps", "4",
                            "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto ls = lines(buf.str());
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "nu,z_sufficient,z_empirical,z_necessary");
  std::remove(path.c_str());
}

TEST(CliRegionMap, CustomSystem) {
  const Outcome r = invoke({"region-map", "--float-system", "custom:10,-14,15", "--z-steps", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliStudentDemo, SingleCauchyRow) {
  const Outcome r = invoke({"student-demo", "--nu-list", "1", "--x-min", "0", "--x-max", "0", "--x-steps", "1",
                            "--methods", "logrec"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "nu,x,method,pdf_gilpelaez,pdf_closed,abs_error,overflow_flag");
  EXPECT_EQ(ls[1].substr(0, 11), "1,0,logrec,");
  const auto f = fields(ls[1]);
  EXPECT_LE(f[5], 1e-8);
  EXPECT_EQ(f[6], 0.0);
}

TEST(CliStudentDemo, NegativeBoundsAndSinglePrecision) {
  const Outcome r = invoke({"student-demo", "--nu-list", "100", "--x-min", "-1", "--x-max", "1", "--x-steps", "3",
                            "--methods", "direct,logrec", "--float-system", "single"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_NE(ls[1].find(",direct,"), std::string::npos);
  EXPECT_EQ(ls[1].back(), '1');  // Gamma(50) overflows single precision
  EXPECT_EQ(ls[2].back(), '0');
}

TEST(CliStudentDemo, SubdivisionCapFromEnvironment) {
  ::setenv("LOGBESSEL_MAX_SUBDIV", "1", 1);
  const Outcome capped = invoke({"student-demo", "--nu-list", "1", "--x-min", "3", "--x-max", "3", "--x-steps", "1",
                                 "--methods", "logrec"});
  ::setenv("LOGBESSEL_MAX_SUBDIV", "abc", 1);
  const Outcome bad = invoke({"student-demo", "--nu-list", "1", "--x-steps", "1", "--methods", "logrec"});
  ::unsetenv("LOGBESSEL_MAX_SUBDIV");
  EXPECT_EQ(capped.code, 0);
  EXPECT_NE(capped.err.find("warning"), std::string::npos);
  EXPECT_EQ(bad.code, 2);
}

TEST(CliExitCodes, ParseErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--nu", "1"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--nu", "x", "--z", "1"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--nu", "1", "--z", "1", "--function", "besselj"}).code, 2);
  EXPECT_EQ(invoke({"student-demo", "--methods", "fast"}).code, 2);
  EXPECT_EQ(invoke({"region-map", "--kind", "sideways"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliExitCodes, DomainErrors) {
  const Outcome z0 = invoke({"eval", "--nu", "1", "--z", "0"});
  EXPECT_EQ(z0.code, 3);
  EXPECT_FALSE(z0.err.empty());
  EXPECT_TRUE(z0.out.empty());
  EXPECT_EQ(invoke({"eval", "--nu", "1", "--z", "-2"}).code, 3);
  EXPECT_EQ(invoke({"region-map", "--kind", "underflow", "--nu-min", "0.5"}).code, 3);
  EXPECT_EQ(invoke({"region-map", "--z-min", "0"}).code, 3);
  EXPECT_EQ(invoke({"region-map", "--float-system", "quad"}).code, 3);
  EXPECT_EQ(invoke({"student-demo", "--nu-list", "0", "--x-steps", "1"}).code, 3);
  EXPECT_EQ(invoke({"student-demo", "--float-system", "custom:1,-1,1", "--x-steps", "1"}).code, 3);
}
