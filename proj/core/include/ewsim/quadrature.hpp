#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ewsim {

/// Result of an adaptive integration.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;      // absolute error estimate
  int evaluations = 0;
  int intervals = 0;
};

struct QuadOptions {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  int max_intervals = 4000;
  const char* label = "integral";  // appears in failure diagnostics
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (G7, K15) on [a, b].  Optional interior
/// breakpoints seed the initial panels (used to resolve known peaks).
/// Throws NumericalError with the worst sub-interval when the tolerance
/// cannot be met within the interval budget.
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadOptions& opt = {},
                              const std::vector<double>& breakpoints = {});

/// Semi-infinite integral int_a^inf f(q) dq for integrands decaying like
/// exp(-decay_scale * (q - a)): the exponential substitution
/// q = a - log(1 - t)/decay_scale maps the tail onto t in [0, 1).
QuadResult integrate_exp_tail(const Integrand& f, double a,
                              double decay_scale, const QuadOptions& opt = {});

/// Integral over (0, b] with a log substitution w = b * exp(-s), suited to
/// integrands with mass spread over many decades near zero.  `decades`
/// bounds the resolved range (default 45 ~ 1e-19.5 relative cut).
QuadResult integrate_log_from_zero(const Integrand& f, double b,
                                   const QuadOptions& opt = {},
                                   double decades = 45.0,
                                   const std::vector<double>& peak_hints = {});

}  // namespace ewsim
