#pragma once

#include <cmath>
#include <random>

#include "bhent/matrix.hpp"
#include "doctest.h"

namespace bhent::testing {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  const ComplexMatrix m = random_matrix(rng, dim);
  return Complex(0.5) * (m + adjoint(m));
}

/// Random full-rank density matrix G G^dagger / tr.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t dim) {
  const ComplexMatrix g = random_matrix(rng, dim);
  ComplexMatrix rho = mat_mul(g, adjoint(g));
  rho = Complex(1.0 / rho.trace().real()) * rho;
  // exact Hermitian symmetry
  return Complex(0.5) * (rho + adjoint(rho));
}

inline std::vector<Complex> random_pure(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<Complex> psi(dim);
  double n = 0.0;
  for (auto& z : psi) {
    z = Complex(g(rng), g(rng));
    n += std::norm(z);
  }
  for (auto& z : psi) z /= std::sqrt(n);
  return psi;
}

}  // namespace bhent::testing
