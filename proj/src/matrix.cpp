#include "bhent/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bhent {

namespace {

void require_finite(const std::vector<Complex>& entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("matrix entry is not finite");
    }
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(msg.str());
  }
}

void require_bipartition(const ComplexMatrix& rho, BipartitionDims dims, const char* op) {
  if (dims.dim_first == 0 || dims.dim_second == 0 || rho.dim() != dims.total()) {
    std::ostringstream msg;
    msg << op << ": matrix dim " << rho.dim() << " does not match bipartition "
        << dims.dim_first << "x" << dims.dim_second;
    throw DimensionError(msg.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
  if (entries_.size() != dim * dim) {
    std::ostringstream msg;
    msg << "expected " << dim * dim << " entries, got " << entries_.size();
    throw DimensionError(msg.str());
  }
  require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw DimensionError("matrix dimension must be positive");
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("initializer rows must form a square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  require_finite(m.entries_);
  return m;
}

ComplexMatrix ComplexMatrix::projector(const std::vector<Complex>& psi) {
  ComplexMatrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  require_finite(m.entries_);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator+");
  ComplexMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator-");
  ComplexMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (auto& z : r.entries_) z *= s;
  return r;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  std::vector<Complex> e = a.entries();
  for (auto& z : e) z = std::conj(z);
  return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t ia = 0; ia < na; ++ia)
    for (std::size_t ja = 0; ja < na; ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < nb; ++ib)
        for (std::size_t jb = 0; jb < nb; ++jb) r(ia * nb + ib, ja * nb + jb) = s * b(ib, jb);
    }
  return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartitionDims dims, Factor keep) {
  require_bipartition(rho, dims, "partial_trace");
  const std::size_t d1 = dims.dim_first, d2 = dims.dim_second;
  if (keep == Factor::first) {
    ComplexMatrix r(d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t k = 0; k < d2; ++k) r(i, j) += rho(i * d2 + k, j * d2 + k);
    return r;
  }
  ComplexMatrix r(d2);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t k = 0; k < d1; ++k) r(i, j) += rho(k * d2 + i, k * d2 + j);
  return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartitionDims dims, Factor which) {
  require_bipartition(rho, dims, "partial_transpose");
  const std::size_t d1 = dims.dim_first, d2 = dims.dim_second;
  ComplexMatrix r(rho.dim());
  for (std::size_t i1 = 0; i1 < d1; ++i1)
    for (std::size_t i2 = 0; i2 < d2; ++i2)
      for (std::size_t j1 = 0; j1 < d1; ++j1)
        for (std::size_t j2 = 0; j2 < d2; ++j2) {
          const Complex v = rho(i1 * d2 + i2, j1 * d2 + j2);
          if (which == Factor::first)
            r(j1 * d2 + i2, i1 * d2 + j2) = v;
          else
            r(i1 * d2 + j2, j1 * d2 + i2) = v;
        }
  return r;
}

double hermiticity_defect(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

namespace {

constexpr int kMaxSweeps = 200;
constexpr double kConvergence = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Diagonalizes a in place; when vectors is non-null the accumulated unitary
// is written there.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* vectors) {
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |a - a^dagger| entry = " << defect;
    throw NumericalError(msg.str());
  }
  const std::size_t n = a.dim();
  // Enforce exact Hermiticity so the rotations see a consistent matrix.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  const double scale = a.frobenius_norm();
  if (scale == 0.0) return;

  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kConvergence * scale) return;
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;

        // Phase q so that a(p, q) becomes the real number r.
        const Complex phase = apq / r;  // e^{i phi}
        const Complex phase_conj = std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= phase_conj;
          a(q, k) *= phase;
        }
        a(p, q) = r;
        a(q, p) = r;
        a(q, q) = a(q, q).real();
        if (vectors) {
          for (std::size_t k = 0; k < n; ++k) (*vectors)(k, q) *= phase_conj;
        }

        // Real symmetric Jacobi rotation on (p, q).
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        if (vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*vectors)(k, p), vkq = (*vectors)(k, q);
            (*vectors)(k, p) = c * vkp - s * vkq;
            (*vectors)(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  throw NumericalError("Jacobi eigensolver did not converge within 200 sweeps");
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  ComplexMatrix work = a;
  jacobi_diagonalize(work, nullptr);
  std::vector<double> values(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) values[i] = work(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a) {
  ComplexMatrix work = a;
  ComplexMatrix vectors = ComplexMatrix::identity(a.dim());
  jacobi_diagonalize(work, &vectors);

  const std::size_t n = a.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() < work(j, j).real();
  });
  HermitianEigensystem result{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = work(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) result.vectors(row, k) = vectors(row, order[k]);
  }
  return result;
}

ComplexMatrix psd_square_root_factor(const ComplexMatrix& rho) {
  return psd_square_root_factor(rho, 0.0);
}

ComplexMatrix psd_square_root_factor(const ComplexMatrix& rho, double relative_cutoff) {
  const auto eig = hermitian_eigensystem(rho);
  const std::size_t n = rho.dim();
  const double floor = relative_cutoff * std::max(eig.values.back(), 0.0);
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (lambda < -kPsdTolerance) {
      std::ostringstream msg;
      msg << "matrix is not positive semidefinite: eigenvalue " << lambda;
      throw NumericalError(msg.str());
    }
    roots[k] = lambda > floor ? std::sqrt(lambda) : 0.0;
  }
  ComplexMatrix l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        if (roots[k] != 0.0) s += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
      l(i, j) = s;
      l(j, i) = std::conj(s);
    }
  for (std::size_t i = 0; i < n; ++i) l(i, i) = l(i, i).real();
  return l;
}

}  // namespace bhent
