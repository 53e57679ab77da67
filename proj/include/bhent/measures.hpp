#pragma once

#include <vector>

#include "bhent/matrix.hpp"

namespace bhent {

/// Raised by validate_density; the message names the violated invariant.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A bipartite density matrix that passed validation: Hermitian within 1e-12,
 * unit trace within 1e-12, no eigenvalue below -1e-10.
 *
 * Only validate_density constructs one.
 */
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  BipartitionDims dims() const noexcept { return dims_; }
  /// Ascending spectrum with dust in [-1e-10, 0) clamped to zero.
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

 private:
  friend DensityMatrix validate_density(ComplexMatrix matrix, BipartitionDims dims);
  DensityMatrix(ComplexMatrix matrix, BipartitionDims dims, std::vector<double> spectrum)
      : matrix_(std::move(matrix)), dims_(dims), spectrum_(std::move(spectrum)) {}

  ComplexMatrix matrix_;
  BipartitionDims dims_;
  std::vector<double> spectrum_;
};

DensityMatrix validate_density(ComplexMatrix matrix, BipartitionDims dims);

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Shannon entropy in bits of a (clamped, non-negative) spectrum.
double spectrum_entropy(const std::vector<double>& eigenvalues);

/// -sum lambda log2 lambda over the clamped spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of the reduced state on one factor.
double marginal_entropy(const DensityMatrix& rho, Factor keep);

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y). Requires 2x2 dims.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/**
 * Square roots of the eigenvalues of rho * spin_flip(rho), descending.
 *
 * The non-Hermitian product is never formed. With rho = L L^dagger (L the
 * Hermitian root) the roots are the singular values of N = L Y conj(L),
 * Y = sigma_y x sigma_y, read off as the non-negative eigenvalues of the
 * Hermitian dilation [[0, N], [N^dagger, 0]]. Working with singular values
 * keeps absolute accuracy near machine epsilon; squaring them first would
 * turn 1e-17 eigenvalue noise into 3e-9 noise on the concurrence.
 */
std::vector<double> wootters_roots(const DensityMatrix& rho);

/// Wootters concurrence in [0, 1]. Requires 2x2 dims.
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation (bits) for a given concurrence.
double eof_from_concurrence(double c);

double entanglement_of_formation(const DensityMatrix& rho);

/// S(first) + S(second) - S(rho), in bits.
double mutual_information(const DensityMatrix& rho);

/// Smallest eigenvalue of the partial transpose on the first factor.
double min_pt_eigenvalue(const DensityMatrix& rho);

/// 4 det(rho_single): squared concurrence of one qubit against the rest of a pure state.
double one_to_rest_tangle(const ComplexMatrix& rho_single);

struct MeasureSet {
  double concurrence = 0.0;
  double eof = 0.0;
  double mutual_information = 0.0;
  double min_pt_eigenvalue = 0.0;
};

/// Every measure through the generic spectral pipeline.
MeasureSet measure_all(const DensityMatrix& rho);

}  // namespace bhent
