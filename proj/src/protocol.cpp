#include "qsc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsc {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

Purification purify(const DensityOperator& rho) {
  const EigenSystem es = eig_hermitian(rho.matrix());
  int rank = 0;
  for (double v : es.values)
    if (v > 1e-12) ++rank;
  if (rank == 0) throw ValidationError("cannot purify the zero operator");

  const int d = rho.dim();
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(rank) * d);
  for (int a = 0; a < rank; ++a)
    psi.segment(static_cast<Eigen::Index>(a) * d, d) = std::sqrt(es.values[a]) * es.vectors[a];
  return Purification{StateVector(psi), rank, d};
}

}  // namespace

std::int64_t QscProtocol::total_dim() const {
  std::int64_t d = 1;
  for (int i = 0; i < copies; ++i) d *= rep.dim;
  return d;
}

bool QscProtocol::pure_states() const {
  return !single_copy_eigenvalues.empty() && single_copy_eigenvalues.front() >= 1.0 - 1e-9;
}

QscProtocol build_protocol(const ProjectiveRep& rep, const DensityOperator& fiducial, int copies,
                           const std::vector<StateVector>& label_states) {
  if (copies < 1) throw ValidationError("copies must be >= 1");
  if (!is_irreducible(rep))
    throw ValidationError("not a group covariant protocol: representation is reducible "
                          "(an irreducible representation is required)");

  QscProtocol p;
  p.rep = rep;
  p.orbit = orbit(rep, fiducial);

  const std::size_t orbit_size = p.orbit.states.size();
  if (!is_power_of_two(orbit_size)) {
    std::ostringstream msg;
    msg << "cannot label with bit strings: orbit size " << orbit_size
        << " is not a power of two";
    throw ValidationError(msg.str());
  }

  p.copies = copies;
  p.bits_per_copy = static_cast<int>(std::lround(std::log2(static_cast<double>(orbit_size))));
  p.n = copies * p.bits_per_copy;

  if (static_cast<std::size_t>(p.total_dim()) * p.total_dim() > kEntryCap)
    throw ValidationError("instance too large");

  if (label_states.empty()) {
    p.label_to_state.resize(orbit_size);
    for (std::size_t s = 0; s < orbit_size; ++s) p.label_to_state[s] = static_cast<int>(s);
  } else {
    if (label_states.size() != orbit_size)
      throw ValidationError("label states do not match the protocol orbit");
    p.label_to_state.assign(orbit_size, -1);
    std::vector<bool> used(orbit_size, false);
    for (std::size_t j = 0; j < orbit_size; ++j) {
      const ComplexMatrix target = DensityOperator::pure(label_states[j]).matrix();
      int match = -1;
      for (std::size_t s = 0; s < orbit_size; ++s)
        if (!used[s] && max_abs(p.orbit.states[s].matrix() - target) <= 1e-8) {
          match = static_cast<int>(s);
          break;
        }
      if (match < 0) throw ValidationError("label states do not match the protocol orbit");
      used[match] = true;
      p.label_to_state[j] = match;
    }
    if (p.label_to_state[0] != 0)
      throw ValidationError("label 0 must map to the fiducial state");
  }
  p.state_to_label.assign(orbit_size, -1);
  for (std::size_t j = 0; j < orbit_size; ++j) p.state_to_label[p.label_to_state[j]] = static_cast<int>(j);

  p.single_copy_eigenvalues = density_eigenvalues(p.orbit.states.front());
  // covariance forces one shared spectrum; treat drift as an internal fault
  for (const DensityOperator& s : p.orbit.states) {
    const std::vector<double> eigs = density_eigenvalues(s);
    for (std::size_t i = 0; i < eigs.size(); ++i)
      if (std::abs(eigs[i] - p.single_copy_eigenvalues[i]) > 1e-9)
        throw std::logic_error("orbit states disagree on their spectrum");
  }

  p.copy_purifications.reserve(orbit_size);
  for (const DensityOperator& s : p.orbit.states) p.copy_purifications.push_back(purify(s));

  return p;
}

int label_of_bits(const std::string& bits) {
  int value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("commitment string must be over {0,1}");
    value = (value << 1) | (c - '0');
  }
  return value;
}

std::string bits_of_label(int label, int width) {
  std::string out(width, '0');
  for (int i = width - 1; i >= 0; --i) {
    out[i] = (label & 1) ? '1' : '0';
    label >>= 1;
  }
  return out;
}

namespace {

std::vector<int> copy_states(const QscProtocol& p, const std::string& bits) {
  if (static_cast<int>(bits.size()) != p.n)
    throw ValidationError("commitment string has wrong length");
  std::vector<int> states(p.copies);
  for (int c = 0; c < p.copies; ++c) {
    const int label = label_of_bits(bits.substr(c * p.bits_per_copy, p.bits_per_copy));
    states[c] = p.label_to_state[label];
  }
  return states;
}

}  // namespace

DensityOperator commitment_state(const QscProtocol& p, const std::string& bits) {
  const std::vector<int> states = copy_states(p, bits);
  ComplexMatrix m = p.orbit.states[states[0]].matrix();
  for (int c = 1; c < p.copies; ++c) m = tensor(m, p.orbit.states[states[c]].matrix());
  return DensityOperator(m);
}

Purification honest_purification(const QscProtocol& p, const std::string& bits) {
  if (p.copies == 1) {
    const std::vector<int> states = copy_states(p, bits);
    return p.copy_purifications[states[0]];
  }
  return purify(commitment_state(p, bits));
}

double honest_run(const QscProtocol& p, const std::string& bits) {
  const Purification honest = honest_purification(p, bits);
  // commit: B half goes out; reveal: A half follows; Bob projects onto psi_x
  const ComplexVector& revealed = honest.psi.amplitudes();
  const Complex amplitude = honest.psi.amplitudes().dot(revealed);
  return std::norm(amplitude);
}

PurifiedFamily from_lockcom(const LockcomSpec& spec) {
  if (spec.n < 1) throw ValidationError("lockcom spec requires n >= 1");
  if (spec.unitaries.empty()) throw ValidationError("lockcom spec requires R >= 1");

  const std::int64_t dim = std::int64_t{1} << spec.n;
  if (static_cast<std::size_t>(dim) * spec.unitaries.size() > kEntryCap)
    throw ValidationError("instance too large");
  for (const ComplexMatrix& u : spec.unitaries) {
    if (u.rows() != dim || u.cols() != dim)
      throw ValidationError("lockcom unitaries must act on dimension 2^n");
    if (unitarity_defect(u) > 1e-10) throw ValidationError("lockcom operator not unitary");
  }

  const int r = static_cast<int>(spec.unitaries.size());
  PurifiedFamily family;
  family.dim_a = (r == 1) ? 1 : r;
  family.dim_b = static_cast<int>(dim);
  family.states.reserve(static_cast<std::size_t>(dim));

  const double scale = 1.0 / std::sqrt(static_cast<double>(r));
  for (std::int64_t x = 0; x < dim; ++x) {
    if (r == 1) {
      family.states.emplace_back(ComplexVector(spec.unitaries[0].col(x)));
      continue;
    }
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(r) * dim);
    for (int i = 0; i < r; ++i)
      psi.segment(static_cast<Eigen::Index>(i) * dim, dim) = scale * spec.unitaries[i].col(x);
    family.states.emplace_back(psi);
  }
  return family;
}

}  // namespace qsc
