#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bhent {

using Complex = std::complex<double>;

/// Raised when operand shapes do not fit together. Always a caller bug.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix fails a numerical precondition (Hermiticity, PSD, ...).
class NumericalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Dense row-major complex square matrix.
 *
 * Small by construction: every model state lives in dimension 2, 4 or 8.
 * Entries must be finite; construction rejects NaN and Inf.
 */
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& values);
  /// |psi><psi|
  static ComplexMatrix projector(const std::vector<Complex>& psi);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  Complex trace() const;
  /// Largest |entry|.
  double max_abs() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Which tensor factor of a bipartite space an operation acts on.
enum class Factor { first, second };

struct BipartitionDims {
  std::size_t dim_first = 2;
  std::size_t dim_second = 2;

  std::size_t total() const noexcept { return dim_first * dim_second; }
  friend bool operator==(const BipartitionDims&, const BipartitionDims&) = default;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
/// Entrywise complex conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Kronecker product; row index of the result is i_a * b.dim() + i_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix of the kept factor.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartitionDims dims, Factor keep);

/// Transposes only the indices of the selected factor.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartitionDims dims, Factor which);

/// max |a - a^dagger| over all entries.
double hermiticity_defect(const ComplexMatrix& a);

/**
 * Eigenvalues of a Hermitian matrix in ascending order.
 *
 * Cyclic complex Jacobi rotations; converged once the off-diagonal Frobenius
 * norm drops below 1e-13 * ||a||_F. Throws NumericalError if the input
 * deviates from Hermitian by more than 1e-12 or after 200 sweeps without
 * convergence.
 */
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

struct HermitianEigensystem {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k is the eigenvector of values[k]
};

/// Same solver as hermitian_eigenvalues, also accumulating the rotations.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a);

/**
 * Hermitian PSD square root L with rho = L * L^dagger.
 *
 * Eigenvalues in [-1e-10, 0) are clamped to zero; anything lower is a
 * NumericalError.
 */
ComplexMatrix psd_square_root_factor(const ComplexMatrix& rho);

/**
 * As psd_square_root_factor, additionally treating eigenvalues at or below
 * relative_cutoff * (largest eigenvalue) as exact zeros. Used where rounding
 * dust in a rank-deficient input must not leak into L as sqrt(dust).
 */
ComplexMatrix psd_square_root_factor(const ComplexMatrix& rho, double relative_cutoff);

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

}  // namespace bhent
