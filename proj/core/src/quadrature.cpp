#include "ewsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "ewsim/errors.hpp"

namespace ewsim {

namespace {

// Kronrod 15 nodes/weights on [-1, 1] and the embedded Gauss-7 weights.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b, int& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  double resk = 0.0, resg = 0.0;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    fv[j] = f(c - x);
    fv[14 - j] = f(c + x);
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
  }
  fv[7] = f(c);
  resk += kWgk[7] * fv[7];
  for (int j = 0; j < 3; ++j)
    resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  resg += kWg[3] * fv[7];
  evals += 15;
  const double value = resk * h;
  double err = std::abs((resk - resg) * h);
  // QUADPACK-style sharpening of the raw (K - G) estimate
  double resabs = 0.0;
  for (int j = 0; j < 7; ++j)
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
  resabs += kWgk[7] * std::abs(fv[7]);
  resabs *= std::abs(h);
  if (resabs > 0.0 && err > 0.0) {
    const double scale = std::pow(200.0 * err / resabs, 1.5);
    if (scale < 1.0) err = resabs * scale;
  }
  return Panel{a, b, value, err};
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadOptions& opt,
                              const std::vector<double>& breakpoints) {
  QuadResult res;
  if (a == b) return res;

  std::vector<double> edges{a};
  for (double p : breakpoints)
    if (p > a && p < b) edges.push_back(p);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = evaluate_panel(f, edges[i], edges[i + 1], res.evaluations);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  auto tolerance = [&] {
    return std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  };

  while (total_err > tolerance() &&
         static_cast<int>(heap.size()) < opt.max_intervals) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      // interval at floating-point resolution; keep its estimate
      total_err -= worst.error;
      worst.error = 0.0;
      heap.push(worst);
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid, res.evaluations);
    Panel right = evaluate_panel(f, mid, worst.b, res.evaluations);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  res.value = total;
  res.error = total_err;
  res.intervals = static_cast<int>(heap.size());

  if (total_err > tolerance()) {
    const Panel& worst = heap.top();
    std::ostringstream msg;
    msg << opt.label << ": adaptive quadrature failed to converge: "
        << "estimate " << total << ", error " << total_err << " > tol "
        << tolerance() << " after " << res.intervals
        << " intervals; worst sub-region [" << worst.a << ", " << worst.b
        << "] contributes error " << worst.error;
    throw NumericalError(msg.str());
  }
  return res;
}

QuadResult integrate_exp_tail(const Integrand& f, double a,
                              double decay_scale, const QuadOptions& opt) {
  require(decay_scale > 0.0, "integrate_exp_tail: decay scale must be positive");
  auto g = [&](double t) {
    const double q = a - std::log1p(-t) / decay_scale;
    return f(q) / ((1.0 - t) * decay_scale);
  };
  // stop just short of t = 1 (q ~ a + 37/decay_scale, exp(-37) tail)
  return integrate_adaptive(g, 0.0, 1.0 - 1e-16, opt, {0.5, 0.9, 0.99});
}

QuadResult integrate_log_from_zero(const Integrand& f, double b,
                                   const QuadOptions& opt, double decades,
                                   const std::vector<double>& peak_hints) {
  require(b > 0.0, "integrate_log_from_zero: upper limit must be positive");
  auto g = [&](double s) {
    const double w = b * std::exp(-s);
    return f(w) * w;
  };
  std::vector<double> bps;
  for (double p : peak_hints)
    if (p > 0.0 && p < b) bps.push_back(std::log(b / p));
  return integrate_adaptive(g, 0.0, decades, opt, bps);
}

}  // namespace ewsim
