#pragma once

namespace cfmimo {

/// Exponential integral Ei(x) for x < 0, to better than 1e-10 absolute.
/// Power series for |x| < 6, modified Lentz continued fraction beyond.
/// Throws std::domain_error for x >= 0.
double exp_int_ei(double x);

/// Scaled product e^z E1(z) for z > 0, evaluated without overflow for
/// any z (E1(z) = -Ei(-z)).
double expe1_scaled(double z);

}  // namespace cfmimo
