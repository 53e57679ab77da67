#include "bhent/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bhent {

namespace {

struct PairSpectrumInputs {
  double alpha2;
  ThermalFactors f;
};

PairSpectrumInputs inputs(const ModelParams& params) {
  validate(params);
  return {params.alpha * params.alpha, thermal_factors(params.omega, params.temperature)};
}

// Smaller root of [[b, c], [c, 0]], i.e. (b - sqrt(b^2 + 4c^2)) / 2, written
// without cancellation so tiny couplings still give a negative value.
double lower_root(double b, double c) {
  const double disc = std::sqrt(b * b + 4.0 * c * c);
  const double denom = b + disc;
  if (denom == 0.0) return 0.0;
  return -2.0 * c * c / denom + 0.0;
}

}  // namespace

void validate(const ModelParams& params) {
  std::ostringstream msg;
  if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
    msg << "alpha must lie in (0, 1), got " << params.alpha;
  } else if (!(params.omega > 0.0) || !std::isfinite(params.omega)) {
    msg << "omega must be positive, got " << params.omega;
  } else if (!(params.temperature >= 0.0) || !std::isfinite(params.temperature)) {
    msg << "temperature must be non-negative, got " << params.temperature;
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

std::string_view to_string(ModePair pair) {
  switch (pair) {
    case ModePair::A_I:
      return "A_I";
    case ModePair::A_II:
      return "A_II";
    case ModePair::I_II:
      return "I_II";
  }
  return "?";
}

double hawking_temperature(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    std::ostringstream msg;
    msg << "black hole mass must be positive, got " << mass;
    throw ParameterError(msg.str());
  }
  return 1.0 / (8.0 * std::numbers::pi * mass);
}

ThermalFactors thermal_factors(double omega, double temperature) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    std::ostringstream msg;
    msg << "omega must be positive, got " << omega;
    throw ParameterError(msg.str());
  }
  if (!(temperature >= 0.0) || std::isnan(temperature)) {
    std::ostringstream msg;
    msg << "temperature must be non-negative, got " << temperature;
    throw ParameterError(msg.str());
  }
  if (temperature == 0.0) return {1.0, 0.0};
  const double ratio = omega / temperature;
  const double decay = std::exp(-ratio);  // in (0, 1]; cannot overflow
  const double inv = 1.0 / std::sqrt(1.0 + decay);
  return {inv, std::exp(-0.5 * ratio) * inv};
}

double TripartiteState::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix TripartiteState::projector() const {
  return ComplexMatrix::projector({amplitudes.begin(), amplitudes.end()});
}

TripartiteState tripartite_state(const ModelParams& params) {
  const auto [alpha2, f] = inputs(params);
  TripartiteState state;
  state.amplitudes[0b000] = params.alpha * f.f_minus;
  state.amplitudes[0b011] = params.alpha * f.f_plus;
  state.amplitudes[0b110] = std::sqrt(1.0 - alpha2);
  return state;
}

DensityMatrix reduced_density(const ModelParams& params, ModePair pair) {
  const TripartiteState state = tripartite_state(params);
  switch (pair) {
    case ModePair::A_I:
      return validate_density(partial_trace(state.projector(), {4, 2}, Factor::first), {2, 2});
    case ModePair::I_II:
      return validate_density(partial_trace(state.projector(), {2, 4}, Factor::second), {2, 2});
    case ModePair::A_II: {
      // Reorder to A, II, I so mode I becomes the trailing factor.
      TripartiteState swapped;
      for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n)
          for (std::size_t p = 0; p < 2; ++p)
            swapped.amplitudes[4 * m + 2 * p + n] = state.amplitudes[4 * m + 2 * n + p];
      return validate_density(partial_trace(swapped.projector(), {4, 2}, Factor::first), {2, 2});
    }
  }
  throw std::logic_error("unknown mode pair");
}

ComplexMatrix single_mode_density(const ModelParams& params, int mode) {
  const ComplexMatrix rho = tripartite_state(params).projector();
  switch (mode) {
    case 0:
      return partial_trace(rho, {2, 4}, Factor::first);
    case 1:
      return partial_trace(partial_trace(rho, {4, 2}, Factor::first), {2, 2}, Factor::second);
    case 2:
      return partial_trace(rho, {4, 2}, Factor::second);
    default:
      throw std::out_of_range("mode index must be 0 (A), 1 (I) or 2 (II)");
  }
}

double closed_form_concurrence(const ModelParams& params, ModePair pair) {
  const auto [alpha2, f] = inputs(params);
  const double initial = 2.0 * params.alpha * std::sqrt(1.0 - alpha2);
  switch (pair) {
    case ModePair::A_I:
      return initial * f.f_minus;
    case ModePair::A_II:
      return initial * f.f_plus;
    case ModePair::I_II:
      return 2.0 * alpha2 * f.f_plus * f.f_minus;
  }
  throw std::logic_error("unknown mode pair");
}

double closed_form_min_pt_eigenvalue(const ModelParams& params, ModePair pair) {
  const auto [alpha2, f] = inputs(params);
  const double coupling = params.alpha * std::sqrt(1.0 - alpha2);
  switch (pair) {
    case ModePair::A_I:
      return lower_root(alpha2 * f.f_plus * f.f_plus, coupling * f.f_minus);
    case ModePair::A_II:
      return lower_root(alpha2 * f.f_minus * f.f_minus, coupling * f.f_plus);
    case ModePair::I_II:
      return lower_root(1.0 - alpha2, alpha2 * f.f_plus * f.f_minus);
  }
  throw std::logic_error("unknown mode pair");
}

double closed_form_eof(const ModelParams& params, ModePair pair) {
  return eof_from_concurrence(closed_form_concurrence(params, pair));
}

MarginalEntropies closed_form_marginal_entropies(const ModelParams& params) {
  const auto [alpha2, f] = inputs(params);
  return {binary_entropy(alpha2), binary_entropy(alpha2 * f.f_minus * f.f_minus),
          binary_entropy(alpha2 * f.f_plus * f.f_plus)};
}

double closed_form_mutual_information(const ModelParams& params, ModePair pair) {
  // The tripartite state is pure, so S(pair) equals the entropy of the
  // remaining single mode.
  const auto s = closed_form_marginal_entropies(params);
  switch (pair) {
    case ModePair::A_I:
      return s.a + s.i - s.ii;
    case ModePair::A_II:
      return s.a + s.ii - s.i;
    case ModePair::I_II:
      return s.i + s.ii - s.a;
  }
  throw std::logic_error("unknown mode pair");
}

LimitReport asymptotic_limits(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in (0, 1), got " << alpha;
    throw ParameterError(msg.str());
  }
  const double alpha2 = alpha * alpha;
  const double h = binary_entropy(alpha2);
  LimitReport r;
  r.alpha = alpha;
  r.zero_temperature.concurrence = {2.0 * alpha * std::sqrt(1.0 - alpha2), 0.0, 0.0};
  r.zero_temperature.mutual_information = {2.0 * h, 0.0, 0.0};
  const double hot = alpha * std::sqrt(2.0 * (1.0 - alpha2));
  r.infinite_temperature.concurrence = {hot, hot, alpha2};
  r.infinite_temperature.mutual_information = {h, h, 2.0 * binary_entropy(0.5 * alpha2) - h};
  r.accessible_mi_ratio = 0.5;
  return r;
}

}  // namespace bhent
