#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace qsc;
using namespace qsc::testing;

namespace {

// independent oracle: naive Kronecker expansion by index arithmetic
ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST_CASE("tensor: identity case") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(tensor(i2, i2) - ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("tensor: cube-root phase diagonal") {
  const Complex w = omega();
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = w;
  const ComplexMatrix t = tensor(d, d);
  REQUIRE(t.rows() == 4);
  CHECK(std::abs(t(0, 0) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(t(1, 1) - w) < 1e-15);
  CHECK(std::abs(t(2, 2) - w) < 1e-15);
  CHECK(std::abs(t(3, 3) - w * w) < 1e-15);
  CHECK(max_abs(t - kron_oracle(d, d)) == 0.0);
}

TEST_CASE("tensor: X with |0><0| places the ones at (2,0) and (0,2)") {
  ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
  proj(0, 0) = 1;
  const ComplexMatrix t = tensor(pauli_x(), proj);
  CHECK(std::abs(t(2, 0) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(t(0, 2) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(t.sum() - Complex{2, 0}) < 1e-15);
  CHECK(max_abs(t - kron_oracle(pauli_x(), proj)) == 0.0);
}

TEST_CASE("tensor: associative on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = rng.gaussian_matrix(2, 3);
    const ComplexMatrix b = rng.gaussian_matrix(3, 2);
    const ComplexMatrix c = rng.gaussian_matrix(2, 2);
    const ComplexMatrix left = tensor(tensor(a, b), c);
    const ComplexMatrix right = tensor(a, tensor(b, c));
    REQUIRE(left.rows() == right.rows());
    REQUIRE(left.cols() == right.cols());
    CHECK(max_abs(left - right) < 1e-12);
  }
}

TEST_CASE("tensor: entry cap") {
  const ComplexMatrix big = ComplexMatrix::Identity(64, 64);
  CHECK_THROWS_WITH_AS(tensor(tensor(big, big), big), doctest::Contains("instance too large"),
                       ValidationError);
}

TEST_CASE("partial trace: maximally entangled state reduces to I/2") {
  const double s = 1.0 / std::sqrt(2.0);
  const DensityOperator rho = DensityOperator::pure(ket({s, 0, 0, s}));
  const DensityOperator reduced = partial_trace(rho, 2, 2, Subsystem::A);
  CHECK(max_abs(reduced.matrix() - ComplexMatrix::Identity(2, 2) / 2.0) < 1e-12);
}

TEST_CASE("partial trace: product state") {
  const StateVector xi01 = ket({std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
  const DensityOperator rho_b = DensityOperator::pure(xi01);
  ComplexVector zero(2);
  zero << 1, 0;
  const ComplexVector joint = tensor(ComplexVector(zero), xi01.amplitudes());
  const DensityOperator reduced =
      partial_trace(DensityOperator::pure(StateVector(joint)), 2, 2, Subsystem::B);
  CHECK(max_abs(reduced.matrix() - rho_b.matrix()) < 1e-12);
}

TEST_CASE("partial trace: correlated two-qubit state") {
  const StateVector psi = ket({std::sqrt(0.9), 0, 0, std::sqrt(0.1)});
  const DensityOperator reduced = partial_trace(DensityOperator::pure(psi), 2, 2, Subsystem::A);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 0.9;
  expected(1, 1) = 0.1;
  CHECK(max_abs(reduced.matrix() - expected) < 1e-12);
}

TEST_CASE("partial trace: preserves the trace and rejects bad factorizations") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = DensityOperator::pure(StateVector(rng.unit_vector(12)));
    const DensityOperator kept = partial_trace(rho, 3, 4, Subsystem::B);
    CHECK(std::abs(kept.matrix().trace().real() - 1.0) < 1e-10);
  }
  const DensityOperator rho = DensityOperator::maximally_mixed(6);
  CHECK_THROWS_WITH_AS(partial_trace(rho, 4, 2, Subsystem::A),
                       doctest::Contains("factorization error"), ValidationError);
}

TEST_CASE("eig_hermitian: diagonal and rank-1 cases") {
  const EigenSystem half = eig_hermitian(ComplexMatrix::Identity(2, 2) / 2.0);
  CHECK(half.values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.values[1] == doctest::Approx(0.5).epsilon(1e-12));

  const StateVector xi01 = ket({std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
  const EigenSystem pure = eig_hermitian(DensityOperator::pure(xi01).matrix());
  CHECK(pure.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(pure.values[1]) < 1e-12);

  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 0.9;
  diag(1, 1) = 0.1;
  const EigenSystem d = eig_hermitian(diag);
  CHECK(d.values[0] == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(d.values[1] == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("eig_hermitian: reconstruction and ordering on random Hermitian input") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix g = rng.gaussian_matrix(5, 5);
    const ComplexMatrix h = 0.5 * (g + g.adjoint().eval());
    const EigenSystem es = eig_hermitian(h);
    ComplexMatrix rebuilt = ComplexMatrix::Zero(5, 5);
    for (int a = 0; a < 5; ++a)
      rebuilt += es.values[a] * es.vectors[a] * es.vectors[a].adjoint();
    CHECK(max_abs(h - rebuilt) < 1e-9);
    for (int a = 1; a < 5; ++a) CHECK(es.values[a - 1] >= es.values[a] - 1e-12);
  }
}

TEST_CASE("eig_hermitian: rejects non-Hermitian input") {
  CHECK_THROWS_WITH_AS(eig_hermitian(mat2(0, 1, 0, 0)), doctest::Contains("not Hermitian"),
                       ValidationError);
}

TEST_CASE("schmidt: maximally entangled and product states") {
  const double s = 1.0 / std::sqrt(2.0);
  const SchmidtDecomposition me = schmidt(ket({s, 0, 0, s}), 2, 2);
  CHECK(me.coefficients[0] == doctest::Approx(s).epsilon(1e-12));
  CHECK(me.coefficients[1] == doctest::Approx(s).epsilon(1e-12));

  const StateVector xi01 = ket({std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
  ComplexVector zero(2);
  zero << 1, 0;
  const SchmidtDecomposition prod =
      schmidt(StateVector(tensor(ComplexVector(zero), xi01.amplitudes())), 2, 2);
  CHECK(prod.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(prod.coefficients[1]) < 1e-12);
}

TEST_CASE("schmidt: coefficients match the reduced-state spectrum") {
  const SchmidtDecomposition s = schmidt(ket({std::sqrt(0.9), 0, 0, std::sqrt(0.1)}), 2, 2);
  CHECK(s.coefficients[0] == doctest::Approx(std::sqrt(0.9)).epsilon(1e-12));
  CHECK(s.coefficients[1] == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
}

TEST_CASE("schmidt: squared coefficients equal reduced eigenvalues on random bipartite states") {
  Rng rng(23);
  const int dims[][2] = {{2, 2}, {2, 3}, {3, 3}, {4, 4}, {2, 8}, {4, 3}};
  int trials = 0;
  while (trials < 200) {
    for (const auto& d : dims) {
      const StateVector psi = StateVector(rng.unit_vector(d[0] * d[1]));
      const SchmidtDecomposition s = schmidt(psi, d[0], d[1]);

      // route 1: reconstruction
      ComplexVector rebuilt = ComplexVector::Zero(psi.dim());
      for (std::size_t a = 0; a < s.coefficients.size(); ++a)
        rebuilt += s.coefficients[a] * tensor(s.basis_a[a], s.basis_b[a]);
      CHECK(max_abs(rebuilt - psi.amplitudes()) < 1e-9);

      // route 2: reduced-state eigenvalues
      const std::vector<double> eigs =
          density_eigenvalues(partial_trace(DensityOperator::pure(psi), d[0], d[1], Subsystem::B));
      double total = 0.0;
      for (std::size_t a = 0; a < s.coefficients.size(); ++a) {
        if (a < eigs.size())
          CHECK(s.coefficients[a] * s.coefficients[a] == doctest::Approx(eigs[a]).epsilon(1e-9));
        total += s.coefficients[a] * s.coefficients[a];
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      ++trials;
    }
  }
}

TEST_CASE("entropy: mixed, pure, and Renyi-1/2 values") {
  for (int d : {2, 3, 4, 8})
    CHECK(entropy(DensityOperator::maximally_mixed(d), 1.0) ==
          doctest::Approx(std::log2(d)).epsilon(1e-12));

  const StateVector xi01 = ket({std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
  CHECK(std::abs(entropy(DensityOperator::pure(xi01), 0.5)) < 1e-9);

  // (sqrt(0.9)+sqrt(0.1))^2 = 1.6 exactly
  CHECK(entropy(diag_state(0.9), 0.5) == doctest::Approx(kLog2OnePointSix).epsilon(1e-12));
}

TEST_CASE("entropy: Renyi-1/2 dominates von Neumann") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix g = rng.gaussian_matrix(4, 4);
    ComplexMatrix p = g * g.adjoint();
    p /= p.trace().real();
    const DensityOperator rho(p);
    CHECK(entropy(rho, 0.5) >= entropy(rho, 1.0) - 1e-10);
  }
}

TEST_CASE("entropy: rejects unsupported orders") {
  CHECK_THROWS_AS(entropy(DensityOperator::maximally_mixed(2), 2.0), ValidationError);
}

TEST_CASE("value types: invariant validation") {
  ComplexVector unnormalized(2);
  unnormalized << 1, 1;
  CHECK_THROWS_AS(StateVector(unnormalized), ValidationError);

  CHECK_THROWS_WITH_AS(DensityOperator(mat2(0.5, 0.5, -0.5, 0.5)),
                       doctest::Contains("Hermitian"), ValidationError);
  CHECK_THROWS_AS(DensityOperator(mat2(0.9, 0, 0, 0.2)), ValidationError);
  CHECK_THROWS_AS(DensityOperator(mat2(1.5, 0, 0, -0.5)), ValidationError);

  ComplexVector nan_vec(2);
  nan_vec << std::nan(""), 0;
  CHECK_THROWS_AS(StateVector(nan_vec), ValidationError);
}
