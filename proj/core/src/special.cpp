#include "ewsim/special.hpp"

#include <cmath>
#include <limits>

namespace ewsim {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
}

double expint_e1(double x) {
  require(x > 0.0, "expint_e1: argument must be positive");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{n>=1} (-1)^{n+1} x^n / (n n!)
    double sum = 0.0;
    double term = 1.0;
    for (int n = 1; n < 40; ++n) {
      term *= -x / n;
      const double add = -term / n;
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // continued fraction exp(-x) / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...)))))
  // evaluated with the modified Lentz algorithm
  const double tiny = std::numeric_limits<double>::min() * 1e10;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x);
}

}  // namespace ewsim
