#include "logbessel_cli/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "logbessel/errors.hpp"
#include "logbessel/float_system.hpp"
#include "logbessel/logk.hpp"
#include "logbessel/quadrature.hpp"
#include "logbessel/range_analysis.hpp"
#include "logbessel/student.hpp"

namespace logbessel::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

namespace {

// Thrown for malformed values that CLI11 cannot validate by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> log_spaced(double lo, double hi, int steps, const char* what) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw DomainError(std::string(what) + ": requires 0 < min <= max");
  }
  if (steps < 1) throw DomainError(std::string(what) + ": requires steps >= 1");
  std::vector<double> v(static_cast<std::size_t>(steps));
  if (steps == 1) {
    v[0] = lo;
    return v;
  }
  const double ratio = hi / lo;
  for (int i = 0; i < steps; ++i) v[i] = lo * std::pow(ratio, static_cast<double>(i) / (steps - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::vector<double> lin_spaced(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("x grid: requires steps >= 1");
  if (!(hi >= lo)) throw DomainError("x grid: requires min <= max");
  std::vector<double> v(static_cast<std::size_t>(steps));
  if (steps == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < steps; ++i) v[i] = lo + (hi - lo) * i / (steps - 1);
  v.back() = hi;
  return v;
}

QuadratureOptions quadrature_options_from_env() {
  QuadratureOptions opts;
  if (const char* env = std::getenv("LOGBESSEL_MAX_SUBDIV"); env != nullptr && *env != '\0') {
    int value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, end, value);
    if (res.ec != std::errc() || res.ptr != end || value < 1) {
      throw UsageError(std::string("LOGBESSEL_MAX_SUBDIV: expected a positive integer, got '") + env + "'");
    }
    opts.max_subintervals = value;
  }
  return opts;
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct EvalArgs {
  std::vector<double> nu;
  std::vector<double> z;
  std::string function = "logk";
  std::string output = "text";
};

struct RegionArgs {
  std::string float_system = "double";
  std::string kind = "overflow";
  double z_min = 1e-2;
  double z_max = 1e2;
  int z_steps = 50;
  double nu_min = 1.0;
  double nu_max = 100.0;
  int nu_steps = 50;
  std::string out;
};

struct StudentArgs {
  std::vector<double> nu_list{1, 10, 100, 1000, 10000};
  double x_min = -5.0;
  double x_max = 5.0;
  int x_steps = 101;
  std::vector<std::string> methods{"direct", "logdirect", "logrec"};
  std::string float_system = "double";
  std::string out;
};

void run_eval(const EvalArgs& a, std::ostream& out) {
  std::function<double(double, double)> fn;
  if (a.function == "logk") {
    fn = [](double nu, double z) { return log_k(nu, z); };
  } else if (a.function == "logk-scaled") {
    fn = [](double nu, double z) { return log_k_scaled(nu, z); };
  } else {
    fn = [](double nu, double z) { return log_i(nu, z); };
  }
  // Evaluate everything before printing so a failure leaves no partial output.
  std::vector<std::array<double, 3>> rows;
  for (double nu : a.nu) {
    for (double z : a.z) rows.push_back({nu, z, fn(nu, z)});
  }
  if (a.output == "csv") {
    out << "nu,z,value\n";
    for (const auto& r : rows) out << format_number(r[0]) << ',' << format_number(r[1]) << ',' << format_number(r[2]) << '\n';
  } else {
    for (const auto& r : rows) {
      out << a.function << "(nu=" << format_number(r[0]) << ", z=" << format_number(r[1])
          << ") = " << format_number(r[2]) << '\n';
    }
  }
}

void run_region_map(const RegionArgs& a, std::ostream& fallback) {
  const FloatSystem sys = FloatSystem::parse(a.float_system);
  FrontierCurve curve = a.kind == "overflow"
                            ? frontier_search(sys, FrontierKind::Overflow, log_spaced(a.z_min, a.z_max, a.z_steps, "z grid"))
                            : frontier_search(sys, FrontierKind::Underflow,
                                              log_spaced(a.nu_min, a.nu_max, a.nu_steps, "order grid"));
  Sink sink(a.out, fallback);
  std::ostream& out = *sink;
  out << (a.kind == "overflow" ? "z,nu_sufficient,nu_empirical,nu_necessary\n"
                               : "nu,z_sufficient,z_empirical,z_necessary\n");
  for (const auto& s : curve.samples) {
    out << format_number(s.abscissa) << ',' << format_number(s.sufficient) << ',' << format_number(s.empirical)
        << ',' << format_number(s.necessary) << '\n';
  }
}

void run_student_demo(const StudentArgs& a, std::ostream& fallback, std::ostream& err) {
  Precision precision = Precision::Double;
  if (a.float_system == "single") {
    precision = Precision::Single;
  } else if (a.float_system != "double") {
    throw DomainError("student-demo: --float-system must be single or double");
  }
  std::vector<CfMethod> methods;
  for (const auto& m : a.methods) methods.push_back(parse_cf_method(m));
  const QuadratureOptions opts = quadrature_options_from_env();
  const auto rows = error_report(a.nu_list, lin_spaced(a.x_min, a.x_max, a.x_steps), methods, precision, opts);

  Sink sink(a.out, fallback);
  std::ostream& out = *sink;
  out << "nu,x,method,pdf_gilpelaez,pdf_closed,abs_error,overflow_flag\n";
  long unconverged = 0;
  for (const auto& r : rows) {
    out << format_number(r.nu) << ',' << format_number(r.x) << ',' << to_string(r.method) << ','
        << format_number(r.pdf_gilpelaez) << ',' << format_number(r.pdf_closed) << ','
        << format_number(r.abs_error) << ',' << (r.cf_overflowed ? 1 : 0) << '\n';
    if (!r.converged) ++unconverged;
  }
  if (unconverged > 0) {
    err << "warning: quadrature did not reach tolerance in " << unconverged << " of " << rows.size()
        << " cells\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"log K_nu(z), overflow/underflow region maps and the Student-t inversion experiment", "logbessel"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate log K, scaled log K or log I");
  eval_cmd->add_option("--nu", eval.nu, "Order(s), comma separated")->required()->delimiter(',');
  eval_cmd->add_option("--z", eval.z, "Argument(s), comma separated")->required()->delimiter(',');
  eval_cmd->add_option("--function", eval.function)
      ->check(CLI::IsMember({"logk", "logk-scaled", "logi"}))
      ->capture_default_str();
  eval_cmd->add_option("--output", eval.output)->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

  RegionArgs region;
  auto* region_cmd = app.add_subcommand("region-map", "Frontier of overflow or underflow with analytic brackets");
  region_cmd->add_option("--float-system", region.float_system, "single, double or custom:P,L,U")
      ->capture_default_str();
  region_cmd->add_option("--kind", region.kind)
      ->check(CLI::IsMember({"overflow", "underflow"}))
      ->capture_default_str();
  region_cmd->add_option("--z-min", region.z_min)->capture_default_str();
  region_cmd->add_option("--z-max", region.z_max)->capture_default_str();
  region_cmd->add_option("--z-steps", region.z_steps)->capture_default_str();
  region_cmd->add_option("--nu-min", region.nu_min, "Underflow kind: smallest order (>= 1)")->capture_default_str();
  region_cmd->add_option("--nu-max", region.nu_max)->capture_default_str();
  region_cmd->add_option("--nu-steps", region.nu_steps)->capture_default_str();
  region_cmd->add_option("--out", region.out, "CSV path (default: standard output)");

  StudentArgs student;
  auto* student_cmd = app.add_subcommand("student-demo", "Gil-Pelaez density against the closed form");
  student_cmd->add_option("--nu-list", student.nu_list)->delimiter(',')->capture_default_str();
  student_cmd->add_option("--x-min", student.x_min)->capture_default_str();
  student_cmd->add_option("--x-max", student.x_max)->capture_default_str();
  student_cmd->add_option("--x-steps", student.x_steps)->capture_default_str();
  student_cmd->add_option("--methods", student.methods, "direct, logdirect, logrec")
      ->delimiter(',')
      ->check(CLI::IsMember({"direct", "logdirect", "logrec"}))
      ->capture_default_str();
  student_cmd->add_option("--float-system", student.float_system, "single or double")->capture_default_str();
  student_cmd->add_option("--out", student.out, "CSV path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) {
      run_eval(eval, out);
    } else if (*region_cmd) {
      run_region_map(region, out);
    } else {
      run_student_demo(student, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitConvergence;
  }
  return kExitOk;
}

}  // namespace logbessel::cli
