#include "qsc/concealing.hpp"

#include <algorithm>
#include <cmath>

#include "qsc/rng.hpp"

namespace qsc {

namespace {

constexpr double kZeroProb = 1e-300;  // 0 log 0 = 0 below this

std::vector<ComplexMatrix> conjugated_states(const ProjectiveRep& rep, const ComplexMatrix& rho0) {
  std::vector<ComplexMatrix> out;
  out.reserve(rep.elements.size());
  for (const ComplexMatrix& g : rep.elements) out.push_back(g * rho0 * g.adjoint());
  return out;
}

double davies_core(int dim, const std::vector<ComplexMatrix>& rho_g, const ComplexVector& phi) {
  double acc = 0.0;
  for (const ComplexMatrix& rho : rho_g) {
    const double p = std::max(0.0, (phi.adjoint() * rho * phi)(0, 0).real());
    if (p > kZeroProb) acc += p * std::log2(p);
  }
  return std::log2(static_cast<double>(dim)) +
         static_cast<double>(dim) / static_cast<double>(rho_g.size()) * acc;
}

ComplexVector davies_gradient(int dim, const std::vector<ComplexMatrix>& rho_g,
                              const ComplexVector& phi) {
  static const double kInvLn2 = 1.0 / std::log(2.0);
  ComplexVector grad = ComplexVector::Zero(phi.size());
  for (const ComplexMatrix& rho : rho_g) {
    const ComplexVector rp = rho * phi;
    const double p = std::max(0.0, (phi.adjoint() * rp)(0, 0).real());
    if (p > kZeroProb) grad += (std::log2(p) + kInvLn2) * rp;
  }
  return static_cast<double>(dim) / static_cast<double>(rho_g.size()) * grad;
}

// Riemannian ascent on the unit sphere with backtracking (step-halving) line
// search.
double ascend(int dim, const std::vector<ComplexMatrix>& rho_g, ComplexVector& phi) {
  double value = davies_core(dim, rho_g, phi);
  double step = 0.5;
  for (int iter = 0; iter < 600; ++iter) {
    const ComplexVector grad = davies_gradient(dim, rho_g, phi);
    const ComplexVector tangent = grad - phi * (phi.adjoint() * grad)(0, 0);
    const double slope = tangent.squaredNorm();
    if (slope < 1e-26) break;

    bool moved = false;
    double gained = 0.0;
    while (step > 1e-18) {
      ComplexVector candidate = phi + step * tangent;
      candidate /= candidate.norm();
      const double next = davies_core(dim, rho_g, candidate);
      if (next > value + 1e-4 * step * slope) {
        gained = next - value;
        phi = candidate;
        value = next;
        step = std::min(step * 2.0, 64.0);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
    if (gained < 1e-10 * std::max(std::abs(value), 1.0)) break;
  }
  return value;
}

void check_irreducible(const ProjectiveRep& rep) {
  if (!is_irreducible(rep))
    throw ValidationError(
        "accessible-information formula requires an irreducible representation");
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw ValidationError("POVM requires at least one effect");
  const Eigen::Index d = effects_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& e : effects_) {
    if (e.rows() != d || e.cols() != d) throw ValidationError("POVM effects of unequal dimension");
    if (hermiticity_defect(e) > 1e-9) throw ValidationError("POVM effect not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
      throw ValidationError("POVM effect not positive semidefinite");
    sum += e;
  }
  if (max_abs(sum - ComplexMatrix::Identity(d, d)) > 1e-9)
    throw ValidationError("POVM effects do not sum to the identity");
}

int Povm::dim() const { return static_cast<int>(effects_.front().rows()); }

const char* to_string(ConcealingMethod m) {
  return m == ConcealingMethod::additivity ? "additivity" : "direct";
}

double davies_value(const ProjectiveRep& rep, const OrbitTable& orbit, const StateVector& phi) {
  if (phi.dim() != rep.dim) throw ValidationError("dimension mismatch");
  check_irreducible(rep);
  const std::vector<ComplexMatrix> rho_g = conjugated_states(rep, orbit.states.front().matrix());
  return davies_core(rep.dim, rho_g, phi.amplitudes());
}

ConcealingReport maximize_accessible_info(const ProjectiveRep& rep, const OrbitTable& orbit,
                                          int restarts, std::uint64_t seed) {
  if (restarts < 1) throw ValidationError("restarts must be >= 1");
  if (rep.dim > 16) throw ValidationError("dimension too large for direct maximization");
  check_irreducible(rep);

  const std::vector<ComplexMatrix> rho_g = conjugated_states(rep, orbit.states.front().matrix());

  Rng rng(seed);
  double best = -1.0;
  ComplexVector best_phi;

  for (int r = 0; r < restarts; ++r) {
    // basis starts first, then seeded random starts
    ComplexVector phi;
    if (r < rep.dim) {
      phi = ComplexVector::Zero(rep.dim);
      phi(r) = 1.0;
    } else {
      phi = rng.unit_vector(rep.dim);
    }
    const double value = ascend(rep.dim, rho_g, phi);
    if (value > best) {
      best = value;
      best_phi = phi;
    }
  }

  ConcealingReport report;
  report.i_acc_bits = best;
  report.phi_star = StateVector(phase_canonical(best_phi));
  report.b_bits = best;
  report.method = ConcealingMethod::direct;
  return report;
}

Povm covariant_povm(const ProjectiveRep& rep, const StateVector& phi) {
  if (phi.dim() != rep.dim) throw ValidationError("dimension mismatch");
  const double weight = static_cast<double>(rep.dim) / static_cast<double>(rep.order());
  std::vector<ComplexMatrix> effects;
  effects.reserve(rep.elements.size());
  ComplexMatrix sum = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (const ComplexMatrix& g : rep.elements) {
    const ComplexVector v = g * phi.amplitudes();
    effects.push_back(weight * v * v.adjoint());
    sum += effects.back();
  }
  if (max_abs(sum - ComplexMatrix::Identity(rep.dim, rep.dim)) > 1e-9)
    throw ValidationError(
        "covariant POVM incomplete: representation appears to be reducible");
  return Povm(std::move(effects));
}

double mutual_info_povm(const std::vector<DensityOperator>& states, const Povm& povm) {
  if (states.empty()) throw ValidationError("mutual information requires at least one state");
  for (const DensityOperator& s : states)
    if (s.dim() != povm.dim()) throw ValidationError("dimension mismatch");

  const std::size_t nx = states.size();
  const std::size_t ny = povm.effects().size();
  const double px = 1.0 / static_cast<double>(nx);

  std::vector<std::vector<double>> joint(nx, std::vector<double>(ny, 0.0));
  std::vector<double> py(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const double t = (states[x].matrix() * povm.effects()[y]).trace().real();
      joint[x][y] = px * std::max(0.0, t);
      py[y] += joint[x][y];
    }

  double info = 0.0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const double p = joint[x][y];
      if (p > kZeroProb && py[y] > kZeroProb) info += p * std::log2(p / (px * py[y]));
    }
  return info;
}

ConcealingReport concealing_bits(const QscProtocol& p, ConcealingMethod mode, int restarts,
                                 std::uint64_t seed) {
  if (mode == ConcealingMethod::additivity) {
    ConcealingReport report = maximize_accessible_info(p.rep, p.orbit, restarts, seed);
    report.b_bits = static_cast<double>(p.copies) * report.i_acc_bits;
    report.method = ConcealingMethod::additivity;
    return report;
  }

  double dim_k = 1.0, order_k = 1.0;
  for (int c = 0; c < p.copies; ++c) {
    dim_k *= p.rep.dim;
    order_k *= p.rep.order();
  }
  if (dim_k > 16.0 || order_k > static_cast<double>(kGroupCap))
    throw ValidationError("direct concealing size cap exceeded");

  const ProjectiveRep rep_k = tensor_power(p.rep, p.copies);
  ComplexMatrix rho0 = p.orbit.states.front().matrix();
  for (int c = 1; c < p.copies; ++c) rho0 = tensor(rho0, p.orbit.states.front().matrix());
  const OrbitTable orbit_k = orbit(rep_k, DensityOperator(rho0));

  ConcealingReport report = maximize_accessible_info(rep_k, orbit_k, restarts, seed);
  report.b_bits = report.i_acc_bits;
  report.method = ConcealingMethod::direct;
  return report;
}

}  // namespace qsc
