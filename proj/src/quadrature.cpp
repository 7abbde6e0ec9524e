#include "polembed/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "polembed/errors.hpp"

namespace polembed {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gauss_kronrod(const std::function<Complex(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double eps = std::numeric_limits<double>::epsilon();

  std::array<Complex, 15> fv;
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * xgk[j]);
    fv[14 - j] = f(center + half * xgk[j]);
  }

  Complex kronrod = wgk[7] * fv[7];
  Complex gauss = wg[3] * fv[7];
  double res_abs = wgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    kronrod += wgk[j] * (fv[j] + fv[14 - j]);
    res_abs += wgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) gauss += wg[j / 2] * (fv[j] + fv[14 - j]);
  }
  const Complex mean = 0.5 * kronrod;
  double res_asc = wgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    res_asc += wgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }

  kronrod *= half;
  res_abs *= std::abs(half);
  res_asc *= std::abs(half);
  double err = std::abs((kronrod - gauss * half));
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return {a, b, kronrod, err};
}

}  // namespace

void validate(const QuadratureSettings& q) {
  if (!(q.rel_tol > 0.0 && q.rel_tol <= 1e-3)) {
    throw InvalidArgument("quadrature: relative tolerance must lie in (0, 1e-3]");
  }
  if (q.max_subdivisions < 1) throw InvalidArgument("quadrature: max_subdivisions must be >= 1");
  if (!(q.fill_offset >= 0.0)) throw InvalidArgument("quadrature: fill offset must be >= 0");
}

IntegrationResult integrate_adaptive(const std::function<Complex(double)>& f,
                                     const std::vector<double>& points, double rel_tol,
                                     double abs_tol, int max_intervals) {
  if (points.size() < 2) throw InvalidArgument("integrate_adaptive: need at least two points");

  std::priority_queue<Interval> heap;
  std::vector<Interval> settled;  // too narrow to split further
  Complex total = 0.0;
  double total_err = 0.0;
  int evaluations = 0;

  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i + 1] > points[i])) continue;
    Interval iv = gauss_kronrod(f, points[i], points[i + 1]);
    evaluations += 15;
    total += iv.value;
    total_err += iv.error;
    heap.push(iv);
  }

  auto converged = [&] { return total_err <= std::max(abs_tol, rel_tol * std::abs(total)); };
  int intervals = static_cast<int>(heap.size());

  while (!converged() && !heap.empty()) {
    if (intervals >= max_intervals) {
      throw QuadratureError("adaptive quadrature did not converge within " +
                                std::to_string(max_intervals) + " subintervals",
                            total.real(), total.imag(), total_err);
    }
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.a), std::abs(worst.b))) {
      settled.push_back(worst);
      continue;
    }
    Interval left = gauss_kronrod(f, worst.a, mid);
    Interval right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    ++intervals;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  const bool done = converged();
  // Re-sum from scratch to shed the running-sum round-off.
  total = 0.0;
  total_err = 0.0;
  for (const auto& iv : settled) {
    total += iv.value;
    total_err += iv.error;
  }
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  if (!done) {
    throw QuadratureError("adaptive quadrature stalled: subintervals reached round-off width",
                          total.real(), total.imag(), total_err);
  }
  return {total, total_err, evaluations, intervals};
}

}  // namespace polembed
