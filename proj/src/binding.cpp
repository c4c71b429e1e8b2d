#include "qsc/binding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qsc/rng.hpp"

namespace qsc {

namespace {

// k-fold product multiset of the single-copy spectrum, descending.
std::vector<double> full_spectrum(const QscProtocol& p) {
  std::vector<double> full{1.0};
  for (int c = 0; c < p.copies; ++c) {
    std::vector<double> next;
    next.reserve(full.size() * p.single_copy_eigenvalues.size());
    for (double f : full)
      for (double s : p.single_copy_eigenvalues) next.push_back(f * s);
    full = std::move(next);
  }
  std::sort(full.begin(), full.end(), std::greater<>());
  return full;
}

ComplexMatrix reshape(const ComplexVector& psi, int dim_a, int dim_b) {
  ComplexMatrix m(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a)
    for (int j = 0; j < dim_b; ++j) m(a, j) = psi(static_cast<Eigen::Index>(a) * dim_b + j);
  return m;
}

// Honest purification reshaped to a dim_ancilla x D matrix, embedding the
// rank-sized ancilla as the leading coordinates.
ComplexMatrix embedded_honest_matrix(const QscProtocol& p, const std::string& bits,
                                     int dim_ancilla) {
  const Purification honest = honest_purification(p, bits);
  if (honest.dim_a > dim_ancilla)
    throw ValidationError("dimension mismatch: ancilla smaller than the honest rank");
  ComplexMatrix m = ComplexMatrix::Zero(dim_ancilla, honest.dim_b);
  m.topRows(honest.dim_a) = reshape(honest.psi.amplitudes(), honest.dim_a, honest.dim_b);
  return m;
}

}  // namespace

BindingReport binding_bound(const QscProtocol& p) {
  BindingReport report;
  report.eigenvalues = full_spectrum(p);

  double root_sum = 0.0;
  for (double v : report.eigenvalues) root_sum += std::sqrt(v);

  const double d = static_cast<double>(p.total_dim());
  report.sum_bound = std::exp2(static_cast<double>(p.n)) / d * root_sum * root_sum;
  report.a_bits = std::log2(report.sum_bound);
  report.renyi_a_bits = renyi_bound(p);
  report.attack_sum = std::numeric_limits<double>::quiet_NaN();
  return report;
}

double renyi_bound(const QscProtocol& p) {
  const int d = static_cast<int>(p.total_dim());
  ComplexMatrix rho0 = p.orbit.states.front().matrix();
  for (int c = 1; c < p.copies; ++c) rho0 = tensor(rho0, p.orbit.states.front().matrix());

  const double mixed_entropy = entropy(DensityOperator::maximally_mixed(d), 1.0);
  const double renyi_half = entropy(DensityOperator(rho0), 0.5);
  return static_cast<double>(p.n) - (mixed_entropy - renyi_half);
}

AttackStrategy me_attack(const QscProtocol& p) {
  const std::int64_t d = p.total_dim();
  const std::int64_t strings = std::int64_t{1} << p.n;
  if (static_cast<std::size_t>(strings) * d * d > (std::size_t{1} << 24))
    throw ValidationError("instance too large");

  ComplexVector phi_me = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::int64_t a = 0; a < d; ++a) phi_me(a * d + a) = amp;

  AttackStrategy strategy;
  strategy.committed = StateVector(phi_me);
  strategy.dim_ancilla = static_cast<int>(d);
  strategy.reveal_ops.resize(static_cast<std::size_t>(strings));

  for (std::int64_t x = 0; x < strings; ++x) {
    const ComplexMatrix m =
        embedded_honest_matrix(p, bits_of_label(static_cast<int>(x), p.n), static_cast<int>(d));
    // the reveal operator is the polar unitary of the reshaped purification
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    strategy.reveal_ops[static_cast<std::size_t>(x)] = {svd.matrixU() * svd.matrixV().adjoint()};
  }
  return strategy;
}

StrategyEvaluation evaluate_strategy(const QscProtocol& p, const AttackStrategy& s) {
  const std::int64_t d = p.total_dim();
  const int da = s.dim_ancilla;
  if (da < 1 || static_cast<std::int64_t>(da) * d != s.committed.dim())
    throw ValidationError("dimension mismatch");
  const std::size_t strings = std::size_t{1} << p.n;
  if (s.reveal_ops.size() != strings)
    throw ValidationError("strategy must provide reveal operations for every string");

  for (const auto& ops : s.reveal_ops) {
    if (ops.empty()) throw ValidationError("empty reveal operation");
    ComplexMatrix completeness = ComplexMatrix::Zero(da, da);
    for (const ComplexMatrix& e : ops) {
      if (e.rows() != da || e.cols() != da) throw ValidationError("dimension mismatch");
      completeness += e.adjoint() * e;
    }
    if (max_abs(completeness - ComplexMatrix::Identity(da, da)) > 1e-9)
      throw ValidationError("completeness violation in reveal operation");
  }

  const ComplexMatrix committed = reshape(s.committed.amplitudes(), da, static_cast<int>(d));

  StrategyEvaluation eval;
  eval.p_tilde.resize(strings, 0.0);
  for (std::size_t x = 0; x < strings; ++x) {
    const ComplexMatrix honest =
        embedded_honest_matrix(p, bits_of_label(static_cast<int>(x), p.n), da);
    double px = 0.0;
    for (const ComplexMatrix& e : s.reveal_ops[x]) {
      const Complex amp = (honest.conjugate().cwiseProduct(e * committed)).sum();
      px += std::norm(amp);
    }
    eval.p_tilde[x] = px;
    eval.total += px;
  }
  return eval;
}

double strategy_search(const QscProtocol& p, int restarts, std::uint64_t seed) {
  const std::int64_t d64 = p.total_dim();
  if (d64 > 64) throw ValidationError("instance too large for strategy search");
  const int d = static_cast<int>(d64);
  const std::size_t strings = std::size_t{1} << p.n;

  std::vector<ComplexMatrix> honest(strings);
  for (std::size_t x = 0; x < strings; ++x)
    honest[x] = embedded_honest_matrix(p, bits_of_label(static_cast<int>(x), p.n), d);

  Rng rng(seed);
  double best = 0.0;

  for (int r = 0; r < restarts; ++r) {
    ComplexMatrix committed = rng.gaussian_matrix(d, d);
    committed /= committed.norm();

    double value = 0.0;
    for (int iter = 0; iter < 300; ++iter) {
      // per-string reveal update: max over unitary E of |tr(E W M_x^H)| is
      // the nuclear norm, attained at the polar factor
      std::vector<ComplexMatrix> reveal(strings);
      for (std::size_t x = 0; x < strings; ++x) {
        const ComplexMatrix k = committed * honest[x].adjoint();
        Eigen::JacobiSVD<ComplexMatrix> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
        reveal[x] = svd.matrixV() * svd.matrixU().adjoint();
      }
      // committed-state update: top eigenvector of sum_x v_x v_x^dag, found
      // through the Gram matrix of the pulled-back targets v_x
      std::vector<ComplexMatrix> targets(strings);
      for (std::size_t x = 0; x < strings; ++x) targets[x] = reveal[x].adjoint() * honest[x];
      ComplexMatrix gram(strings, strings);
      for (std::size_t x = 0; x < strings; ++x)
        for (std::size_t y = 0; y < strings; ++y)
          gram(x, y) = (targets[x].conjugate().cwiseProduct(targets[y])).sum();
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
      const int top = static_cast<int>(strings) - 1;
      const double next = es.eigenvalues()(top);

      ComplexMatrix updated = ComplexMatrix::Zero(d, d);
      for (std::size_t x = 0; x < strings; ++x) updated += es.eigenvectors()(x, top) * targets[x];
      const double norm = updated.norm();
      if (norm < 1e-14) break;
      committed = updated / norm;

      if (next - value <= 1e-10 * std::max(next, 1.0)) {
        value = next;
        break;
      }
      value = next;
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace qsc
