#include "bhent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bhent {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* op) {
  if (rho.dims() != BipartitionDims{2, 2}) {
    std::ostringstream msg;
    msg << op << " requires a qubit x qubit state, got dims " << rho.dims().dim_first << "x"
        << rho.dims().dim_second;
    throw DimensionError(msg.str());
  }
}

// Eigenvalues of rho below this fraction of the largest are rank-deficiency
// noise when building the square-root factor for the concurrence.
constexpr double kRankCutoff = 1e-14;

double entropy_term(double lambda) {
  return lambda > 0.0 ? -lambda * std::log2(lambda) : 0.0;
}

const ComplexMatrix& sigma_y_sigma_y() {
  static const ComplexMatrix yy = [] {
    const ComplexMatrix y{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
    return kron(y, y);
  }();
  return yy;
}

}  // namespace

DensityMatrix validate_density(ComplexMatrix matrix, BipartitionDims dims) {
  if (matrix.dim() != dims.total()) {
    std::ostringstream msg;
    msg << "density matrix dim " << matrix.dim() << " does not match bipartition "
        << dims.dim_first << "x" << dims.dim_second;
    throw DimensionError(msg.str());
  }
  const double defect = hermiticity_defect(matrix);
  if (defect > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "not Hermitian: max |rho - rho^dagger| = " << defect;
    throw InvalidStateError(msg.str());
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - 1.0) > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "trace is " << tr.real() << " (deviation " << std::abs(tr - 1.0) << " from 1)";
    throw InvalidStateError(msg.str());
  }
  auto spectrum = hermitian_eigenvalues(matrix);
  if (spectrum.front() < -kPsdTolerance) {
    std::ostringstream msg;
    msg << "not positive semidefinite: eigenvalue " << spectrum.front();
    throw InvalidStateError(msg.str());
  }
  for (auto& v : spectrum) v = std::max(v, 0.0);
  return DensityMatrix(std::move(matrix), dims, std::move(spectrum));
}

double binary_entropy(double x) { return entropy_term(x) + entropy_term(1.0 - x); }

double spectrum_entropy(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) s += entropy_term(v);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return spectrum_entropy(rho.spectrum()); }

double marginal_entropy(const DensityMatrix& rho, Factor keep) {
  auto spectrum = hermitian_eigenvalues(partial_trace(rho.matrix(), rho.dims(), keep));
  for (auto& v : spectrum) {
    if (v < -kPsdTolerance) throw NumericalError("marginal has a negative eigenvalue");
  }
  return spectrum_entropy(spectrum);
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  require_two_qubits(rho, "spin_flip");
  const auto& yy = sigma_y_sigma_y();
  return mat_mul(mat_mul(yy, conjugate(rho.matrix())), yy);
}

std::vector<double> wootters_roots(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  const ComplexMatrix l = psd_square_root_factor(rho.matrix(), kRankCutoff);
  const ComplexMatrix n = mat_mul(mat_mul(l, sigma_y_sigma_y()), conjugate(l));

  ComplexMatrix dilation(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = n(i, j);
      dilation(4 + j, i) = std::conj(n(i, j));
    }
  const auto values = hermitian_eigenvalues(dilation);  // +-sigma_k, ascending
  std::vector<double> roots(values.rbegin(), values.rbegin() + 4);
  for (auto& r : roots) r = std::max(r, 0.0);
  return roots;
}

double concurrence(const DensityMatrix& rho) {
  const auto roots = wootters_roots(rho);
  const double c = roots[0] - roots[1] - roots[2] - roots[3];
  return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  // (1 - sqrt(1 - c^2)) / 2 without cancellation for small c.
  const double root = std::sqrt((1.0 - c) * (1.0 + c));
  const double minor = c * c / (2.0 * (1.0 + root));
  return binary_entropy(minor);
}

double entanglement_of_formation(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence(rho));
}

double mutual_information(const DensityMatrix& rho) {
  return marginal_entropy(rho, Factor::first) + marginal_entropy(rho, Factor::second) -
         von_neumann_entropy(rho);
}

double min_pt_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims(), Factor::first))
      .front();
}

double one_to_rest_tangle(const ComplexMatrix& rho_single) {
  if (rho_single.dim() != 2) {
    throw DimensionError("one_to_rest_tangle requires a single-qubit (2x2) matrix");
  }
  const Complex det = rho_single(0, 0) * rho_single(1, 1) - rho_single(0, 1) * rho_single(1, 0);
  return std::clamp(4.0 * det.real(), 0.0, 1.0);
}

MeasureSet measure_all(const DensityMatrix& rho) {
  MeasureSet m;
  m.concurrence = concurrence(rho);
  m.eof = eof_from_concurrence(m.concurrence);
  m.mutual_information = mutual_information(rho);
  m.min_pt_eigenvalue = min_pt_eigenvalue(rho);
  return m;
}

}  // namespace bhent
