#pragma once

// Known-wrong variants of three expressions. Used only to show that the
// acceptance checks catch them.

#include <cmath>

#include "bhent/model.hpp"

namespace bhent::literal {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Norm of the three-mode state built with (e^{-+omega/T} + 2)^{-1/2} coefficients.
inline double state_norm_plus_two(const ModelParams& p) {
  const double a2 = p.alpha * p.alpha;
  double weight;
  if (p.temperature == 0.0) {
    weight = 0.5;  // (0 + 2)^{-1} + (inf + 2)^{-1}
  } else {
    const double x = p.omega / p.temperature;
    weight = 1.0 / (std::exp(-x) + 2.0) + 1.0 / (std::exp(x) + 2.0);
  }
  return std::sqrt(a2 * weight + (1.0 - a2));
}

/// Mutual information of modes I and II written with the A_I arrangement of terms.
inline double mutual_information_i_ii(const ModelParams& p) {
  const double a2 = p.alpha * p.alpha;
  const auto f = thermal_factors(p.omega, p.temperature);
  const double plus = a2 * f.f_plus * f.f_plus, minus = a2 * f.f_minus * f.f_minus;
  return xlog2x(1.0 - plus) + xlog2x(plus) - xlog2x(1.0 - a2) - xlog2x(1.0 - minus) -
         xlog2x(minus) - xlog2x(a2);
}

/// Partial-transpose eigenvalue of the I_II state with the overall minus sign
/// and without the factor 4 on the coupling term.
inline double lambda_minus_i_ii(const ModelParams& p) {
  const double a2 = p.alpha * p.alpha;
  const auto f = thermal_factors(p.omega, p.temperature);
  const double product2 = f.f_plus * f.f_plus * f.f_minus * f.f_minus;
  return -0.5 * (1.0 - a2 - std::sqrt(1.0 - 2.0 * a2 + a2 * a2 + a2 * a2 * product2));
}

/// I_II concurrence as alpha^2 (e^{w/T} + e^{-w/T} + 2)^{-1/2}.
inline double concurrence_i_ii(const ModelParams& p) {
  const auto f = thermal_factors(p.omega, p.temperature);
  return p.alpha * p.alpha * f.f_plus * f.f_minus;
}

}  // namespace bhent::literal
