#include "qsc/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsc {

namespace {

constexpr double kPhaseScanThreshold = 1e-6;

Complex leading_entry(const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > kPhaseScanThreshold) return m(r, c);
  return {1.0, 0.0};
}

void check_entry_budget(std::size_t rows, std::size_t cols, std::size_t cap) {
  if (rows != 0 && cols > cap / rows) throw ValidationError("instance too large");
  if (rows * cols > cap) throw ValidationError("instance too large");
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
  return true;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix phase_canonical(const ComplexMatrix& m) {
  const Complex u = leading_entry(m);
  const double a = std::abs(u);
  if (a < kPhaseScanThreshold) return m;
  return m * (std::conj(u) / a);
}

ComplexVector phase_canonical(const ComplexVector& v) {
  ComplexMatrix m = v;
  return phase_canonical(m).col(0);
}

double distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("dimension mismatch");
  Complex t = (b.adjoint() * a).trace();
  const double ta = std::abs(t);
  const Complex phase = (ta > 1e-12) ? t / ta : Complex{1.0, 0.0};
  return max_abs(a - phase * b);
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return 1.0;
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return 1.0;
  return max_abs(m - m.adjoint());
}

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) throw ValidationError("state vector must have dimension >= 1");
  if (!all_finite(amps_)) throw ValidationError("state vector has non-finite amplitudes");
  if (std::abs(amps_.norm() - 1.0) > 1e-10)
    throw ValidationError("state vector not normalized");
}

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw ValidationError("density operator must be square");
  if (!all_finite(m_)) throw ValidationError("density operator has non-finite entries");
  if (hermiticity_defect(m_) > 1e-10) throw ValidationError("density operator not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > 1e-10 || std::abs(m_.trace().imag()) > 1e-10)
    throw ValidationError("density operator trace is not 1");
  m_ = 0.5 * (m_ + m_.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw ValidationError("density operator not positive semidefinite");
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  const ComplexVector& a = psi.amplitudes();
  return DensityOperator(a * a.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  if (dim < 1) throw ValidationError("dimension must be >= 1");
  return DensityOperator(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t entry_cap) {
  check_entry_budget(static_cast<std::size_t>(a.rows()) * b.rows(),
                     static_cast<std::size_t>(a.cols()) * b.cols(), entry_cap);
  return Eigen::kroneckerProduct(a, b);
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b, std::size_t entry_cap) {
  check_entry_budget(static_cast<std::size_t>(a.size()) * b.size(), 1, entry_cap);
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, int dim_a, int dim_b, Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 ||
      static_cast<std::int64_t>(dim_a) * dim_b != static_cast<std::int64_t>(rho.dim()))
    throw ValidationError("factorization error");
  const ComplexMatrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return DensityOperator(out);
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k)
    for (int l = 0; l < dim_b; ++l)
      for (int i = 0; i < dim_a; ++i) out(k, l) += m(i * dim_b + k, i * dim_b + l);
  return DensityOperator(out);
}

namespace {

// Lexicographic key on entries rounded at 1e-9, used to break eigenvalue ties
// deterministically.
std::vector<std::pair<long long, long long>> rounded_key(const ComplexVector& v) {
  std::vector<std::pair<long long, long long>> key(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    key[i] = {llround(v(i).real() * 1e9), llround(v(i).imag() * 1e9)};
  return key;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() < 1) throw ValidationError("not Hermitian");
  if (!all_finite(h)) throw ValidationError("matrix has non-finite entries");
  if (hermiticity_defect(h) > 1e-10) throw ValidationError("not Hermitian");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint().eval()));
  if (solver.info() != Eigen::Success) throw ValidationError("eigendecomposition failed");

  const int d = static_cast<int>(h.rows());
  EigenSystem out;
  out.values.resize(d);
  out.vectors.resize(d);
  for (int i = 0; i < d; ++i) {
    out.values[i] = solver.eigenvalues()(d - 1 - i);  // descending
    out.vectors[i] = phase_canonical(ComplexVector(solver.eigenvectors().col(d - 1 - i)));
  }
  // order degenerate clusters by the rounded eigenvector key
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && out.values[start] - out.values[end] <= 1e-9) ++end;
    if (end - start > 1) {
      std::vector<int> idx(end - start);
      std::iota(idx.begin(), idx.end(), start);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return rounded_key(out.vectors[a]) < rounded_key(out.vectors[b]);
      });
      std::vector<double> vals;
      std::vector<ComplexVector> vecs;
      for (int i : idx) {
        vals.push_back(out.values[i]);
        vecs.push_back(out.vectors[i]);
      }
      std::copy(vals.begin(), vals.end(), out.values.begin() + start);
      std::copy(vecs.begin(), vecs.end(), out.vectors.begin() + start);
    }
    start = end;
  }
  return out;
}

std::vector<double> density_eigenvalues(const DensityOperator& rho) {
  std::vector<double> values = eig_hermitian(rho.matrix()).values;
  for (double& v : values) {
    if (v < -1e-12 || v > 1.0 + 1e-12)
      throw ValidationError("density operator spectrum outside [0,1] beyond clipping threshold");
    v = std::clamp(v, 0.0, 1.0);
  }
  return values;
}

SchmidtDecomposition schmidt(const StateVector& psi, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 ||
      static_cast<std::int64_t>(dim_a) * dim_b != static_cast<std::int64_t>(psi.dim()))
    throw ValidationError("factorization error");

  ComplexMatrix m(dim_a, dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_b; ++j) m(i, j) = psi.amplitudes()(i * dim_b + j);

  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int r = static_cast<int>(svd.singularValues().size());

  SchmidtDecomposition out;
  out.coefficients.resize(r);
  out.basis_a.resize(r);
  out.basis_b.resize(r);
  for (int a = 0; a < r; ++a) {
    out.coefficients[a] = svd.singularValues()(a);
    ComplexVector va = svd.matrixU().col(a);
    ComplexVector vb = svd.matrixV().col(a).conjugate();
    // rotate the pair so the A vector is phase-canonical; the product term is
    // unchanged
    const Complex u = leading_entry(va);
    const double abs_u = std::abs(u);
    if (abs_u > kPhaseScanThreshold) {
      const Complex phase = std::conj(u) / abs_u;
      va *= phase;
      vb *= std::conj(phase);
    }
    out.basis_a[a] = va;
    out.basis_b[a] = vb;
  }
  return out;
}

double entropy(const DensityOperator& rho, double alpha) {
  const std::vector<double> values = density_eigenvalues(rho);
  if (alpha == 1.0) {
    double s = 0.0;
    for (double v : values)
      if (v > 0.0) s -= v * std::log2(v);
    return s;
  }
  if (alpha == 0.5) {
    double root_sum = 0.0;
    for (double v : values) root_sum += std::sqrt(v);
    return 2.0 * std::log2(root_sum);
  }
  throw ValidationError("unsupported Renyi order: only alpha in {1, 1/2}");
}

}  // namespace qsc
