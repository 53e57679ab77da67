#pragma once

#include <array>
#include <string_view>

#include "bhent/measures.hpp"

namespace bhent {

/// Raised for parameters outside the physical domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point (alpha, omega, T) in parameter space; natural units.
struct ModelParams {
  double alpha = 0.0;        ///< amplitude of |00> in the initial state, in (0, 1)
  double omega = 1.0;        ///< mode frequency, > 0
  double temperature = 0.0;  ///< Hawking temperature, >= 0; 0 is the exact limit
};

/// Throws ParameterError naming the offending field.
void validate(const ModelParams& params);

/// Fermionic Bogoliubov amplitudes of the Kruskal vacuum, f_minus^2 + f_plus^2 = 1.
struct ThermalFactors {
  double f_minus = 1.0;  ///< (e^{-omega/T} + 1)^{-1/2}
  double f_plus = 0.0;   ///< (e^{omega/T} + 1)^{-1/2}
};

enum class ModePair { A_I, A_II, I_II };

inline constexpr std::array<ModePair, 3> kAllPairs = {ModePair::A_I, ModePair::A_II,
                                                      ModePair::I_II};

/// "A_I", "A_II", "I_II"
std::string_view to_string(ModePair pair);

/// T = 1 / (8 pi M).
double hawking_temperature(double mass);

/// T == 0 returns (1, 0) without touching exp.
ThermalFactors thermal_factors(double omega, double temperature);

/// Amplitudes over |m>_A |n>_I |p>_II, basis index 4m + 2n + p.
struct TripartiteState {
  std::array<Complex, 8> amplitudes{};

  double norm() const;
  ComplexMatrix projector() const;
};

/// alpha f_minus |000> + alpha f_plus |011> + sqrt(1 - alpha^2) |110>.
TripartiteState tripartite_state(const ModelParams& params);

/// Two-mode state obtained by tracing the third mode out of the tripartite projector.
DensityMatrix reduced_density(const ModelParams& params, ModePair pair);

/// Single-mode reduced state of the tripartite state; mode is 0 (A), 1 (I) or 2 (II).
ComplexMatrix single_mode_density(const ModelParams& params, int mode);

// Closed forms. Each agrees with the corresponding spectral measure of
// reduced_density to within 1e-9.

double closed_form_concurrence(const ModelParams& params, ModePair pair);
double closed_form_min_pt_eigenvalue(const ModelParams& params, ModePair pair);
double closed_form_eof(const ModelParams& params, ModePair pair);
double closed_form_mutual_information(const ModelParams& params, ModePair pair);

/// Entropies (bits) of the single-mode marginals A, I, II.
struct MarginalEntropies {
  double a = 0.0;
  double i = 0.0;
  double ii = 0.0;
};
MarginalEntropies closed_form_marginal_entropies(const ModelParams& params);

/// Concurrence and mutual information for the three pairs, in kAllPairs order.
struct PairValues {
  std::array<double, 3> concurrence{};
  std::array<double, 3> mutual_information{};
};

struct LimitReport {
  double alpha = 0.0;
  PairValues zero_temperature;
  PairValues infinite_temperature;
  /// I(A_I, T -> inf) / I(A_I, 0); exactly 1/2 for every alpha.
  double accessible_mi_ratio = 0.5;
};

/// Analytic T = 0 and T -> infinity values.
LimitReport asymptotic_limits(double alpha);

}  // namespace bhent
