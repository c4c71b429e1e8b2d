#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Cap on the entry count of any single constructed matrix (desk scale).
inline constexpr std::size_t kEntryCap = std::size_t{1} << 20;

bool all_finite(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

// Multiplies by a global phase so that the first entry (row-major scan) with
// magnitude above 1e-6 becomes real and nonnegative.
ComplexMatrix phase_canonical(const ComplexMatrix& m);
ComplexVector phase_canonical(const ComplexVector& v);

// Entrywise max-norm distance minimized over a global phase.
double distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

double unitarity_defect(const ComplexMatrix& u);
double hermiticity_defect(const ComplexMatrix& m);

// Unit vector; norm checked to 1e-10 at construction. Default-constructs to
// the trivial one-dimensional state.
class StateVector {
 public:
  StateVector() : amps_(ComplexVector::Ones(1)) {}
  explicit StateVector(ComplexVector amplitudes);
  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }

 private:
  ComplexVector amps_;
};

// Hermitian (1e-10), unit-trace (1e-10), positive semidefinite (-1e-10)
// matrix; the stored matrix is symmetrized.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m);
  static DensityOperator pure(const StateVector& psi);
  static DensityOperator maximally_mixed(int dim);
  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

enum class Subsystem { A, B };

// Kronecker product; throws "instance too large" past entry_cap.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t entry_cap = kEntryCap);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b,
                     std::size_t entry_cap = kEntryCap);

DensityOperator partial_trace(const DensityOperator& rho, int dim_a, int dim_b, Subsystem keep);

struct EigenSystem {
  std::vector<double> values;           // descending
  std::vector<ComplexVector> vectors;   // orthonormal, phase-canonical
};

// Sorted descending; equal eigenvalues (within 1e-9) are ordered by the
// lexicographic order of their eigenvectors' entries rounded at 1e-9, so
// reports are reproducible.
EigenSystem eig_hermitian(const ComplexMatrix& h);

// Spectrum of a density operator, descending, with excursions within 1e-12
// clipped into [0, 1]. Anything worse is an error rather than clipped.
std::vector<double> density_eigenvalues(const DensityOperator& rho);

struct SchmidtDecomposition {
  std::vector<double> coefficients;     // nonnegative, descending
  std::vector<ComplexVector> basis_a;
  std::vector<ComplexVector> basis_b;
};
SchmidtDecomposition schmidt(const StateVector& psi, int dim_a, int dim_b);

// Entropy in bits. alpha = 1 gives von Neumann -sum(l log2 l); alpha = 0.5
// gives the Renyi-1/2 form 2 log2(sum sqrt(l)). 0 log 0 = 0.
double entropy(const DensityOperator& rho, double alpha);

}  // namespace qsc
