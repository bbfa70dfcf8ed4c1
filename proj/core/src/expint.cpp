#include "cfmimo/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfmimo {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kSeriesCutoff = 6.0;

// E1(z) = -gamma - ln z + sum_{n>=1} (-1)^{n+1} z^n / (n n!) for z > 0.
double e1_series(double z) {
  double sum = 0.0;
  double term = 1.0;
  for (int n = 1; n <= 200; ++n) {
    term *= -z / n;
    const double add = -term / n;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return -kEulerGamma - std::log(z) + sum;
}

// Modified Lentz evaluation of the continued fraction
//   e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- 9/(z+7- ...))))
// i.e. the n=1 case of the standard E1 fraction; returns the scaled value.
double e1_cf_scaled(double z) {
  constexpr double kTiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace

double expe1_scaled(double z) {
  if (!(z > 0)) throw std::domain_error("expe1_scaled: z must be positive");
  if (z < kSeriesCutoff) return std::exp(z) * e1_series(z);
  return e1_cf_scaled(z);
}

double exp_int_ei(double x) {
  if (!(x < 0)) throw std::domain_error("exp_int_ei: defined here for x < 0 only");
  const double z = -x;
  if (z < kSeriesCutoff) return -e1_series(z);
  return -std::exp(-z) * e1_cf_scaled(z);
}

}  // namespace cfmimo
