#include "logbessel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "logbessel/errors.hpp"

namespace logbessel {

namespace {

// Kronrod abscissae (descending, last is the centre); odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment qk15(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk[j];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  if (resabs > kUflow / (50.0 * kEps)) abserr = std::max(kEps * 50.0 * resabs, abserr);
  return {a, b, result, abserr};
}

QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
    throw DomainError("gauss_kronrod_integrate: tolerances must be positive");
  }
  if (opts.max_subintervals < 1) throw DomainError("gauss_kronrod_integrate: max_subintervals must be >= 1");

  std::priority_queue<Segment> heap;
  const Segment first = qk15(f, a, b);
  heap.push(first);
  double value = first.value;
  double error = first.error;
  int count = 1;

  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(value)); };
  while (true) {
    if (!std::isfinite(value) || !std::isfinite(error)) return {value, error, count, false};
    if (error <= tolerance()) return {value, error, count, true};
    if (count >= opts.max_subintervals) break;

    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Too narrow to split further in double.
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
    heap.pop();
    const Segment left = qk15(f, worst.a, mid);
    const Segment right = qk15(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++count;
    // Re-sum instead of updating incrementally to avoid drift over many splits.
    if (count % 64 == 0) {
      std::vector<Segment> all;
      all.reserve(heap.size());
      value = 0.0;
      error = 0.0;
      while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
      }
      for (const auto& s : all) {
        value += s.value;
        error += s.error;
        heap.push(s);
      }
    } else {
      value += left.value + right.value - worst.value;
      error += left.error + right.error - worst.error;
    }
  }
  return {value, std::abs(error), count, false};
}

}  // namespace

QuadratureResult gauss_kronrod_integrate(const std::function<double(double)>& f, double a, double b,
                                         const QuadratureOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("gauss_kronrod_integrate: interval endpoints must be finite");
  }
  return adaptive(f, a, b, opts);
}

QuadratureResult gauss_kronrod_integrate_half_line(const std::function<double(double)>& f,
                                                   const QuadratureOptions& opts) {
  const auto g = [&f](double s) {
    const double t = (1.0 - s) / s;
    const double v = f(t);
    return v == 0.0 ? 0.0 : v / (s * s);
  };
  return adaptive(g, 0.0, 1.0, opts);
}

}  // namespace logbessel
