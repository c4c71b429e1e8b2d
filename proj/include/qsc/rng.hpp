#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace qsc {

// Seeded generator with hand-rolled uniform/gaussian mappings so that streams
// are identical across standard libraries (std::normal_distribution is
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53 bits
  double uniform() { return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  Eigen::VectorXcd gaussian_vector(int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
    return v;
  }

  Eigen::VectorXcd unit_vector(int dim) {
    Eigen::VectorXcd v = gaussian_vector(dim);
    double n = v.norm();
    while (n < 1e-12) {
      v = gaussian_vector(dim);
      n = v.norm();
    }
    return v / n;
  }

  Eigen::MatrixXcd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = complex_gaussian();
    return m;
  }

  // Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
  // phase fix.
  Eigen::MatrixXcd random_unitary(int dim) {
    const Eigen::MatrixXcd g = gaussian_matrix(dim, dim);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
      const std::complex<double> d = r(i, i);
      const double a = std::abs(d);
      q.col(i) *= (a > 1e-14) ? d / a : 1.0;
    }
    return q;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qsc
