#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qsc/analysis.hpp"
#include "qsc/binding.hpp"
#include "qsc/concealing.hpp"
#include "qsc/group.hpp"
#include "qsc/linalg.hpp"
#include "qsc/protocol.hpp"
#include "qsc/rng.hpp"

namespace qsc::testing {

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline ComplexMatrix pauli_x() { return mat2(0, 1, 1, 0); }
inline ComplexMatrix pauli_y() { return mat2(0, Complex{0, -1}, Complex{0, 1}, 0); }
inline ComplexMatrix pauli_z() { return mat2(1, 0, 0, -1); }
inline ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return mat2(s, s, s, -s);
}

inline Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

inline StateVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const Complex& a : amps) v(i++) = a;
  return StateVector(v);
}

inline DensityOperator diag_state(double p) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  return DensityOperator(m);
}

inline QscProtocol tetra_protocol(int copies = 1) {
  const BuiltinProtocol b = builtin_rep(Builtin::tetrahedral);
  return build_protocol(b.rep, DensityOperator::pure(*b.fiducial), copies, b.label_states);
}

inline QscProtocol pauli2_protocol(int copies = 1) {
  const BuiltinProtocol b = builtin_rep(Builtin::pauli2);
  return build_protocol(b.rep, DensityOperator::pure(*b.fiducial), copies, b.label_states);
}

inline QscProtocol quaternion_mixed_protocol(int copies = 1, double p = 0.9) {
  const BuiltinProtocol b = builtin_rep(Builtin::quaternion);
  return build_protocol(b.rep, diag_state(p), copies);
}

// A valid random attack: Haar unitary reveal for m = 1, or a random isometry
// split into m Kraus blocks.
inline AttackStrategy random_strategy(const QscProtocol& p, Rng& rng, int m = 1) {
  const int d = static_cast<int>(p.total_dim());
  AttackStrategy s;
  s.dim_ancilla = d;
  s.committed = StateVector(rng.unit_vector(d * d));
  const std::size_t strings = std::size_t{1} << p.n;
  s.reveal_ops.resize(strings);
  for (std::size_t x = 0; x < strings; ++x) {
    if (m == 1) {
      s.reveal_ops[x] = {rng.random_unitary(d)};
      continue;
    }
    const ComplexMatrix g = rng.gaussian_matrix(m * d, d);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix q = ComplexMatrix(qr.householderQ()).leftCols(d);
    std::vector<ComplexMatrix> ops(m);
    for (int i = 0; i < m; ++i) ops[i] = q.middleRows(static_cast<Eigen::Index>(i) * d, d);
    s.reveal_ops[x] = std::move(ops);
  }
  return s;
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

inline constexpr double kLog2FourThirds = 0.4150374992788438;
inline constexpr double kLog2OnePointSix = 0.6780719051126377;

}  // namespace qsc::testing
