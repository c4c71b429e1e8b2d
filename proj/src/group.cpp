#include "qsc/group.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace qsc {

namespace {

constexpr double kDedupTol = 1e-8;

// Bucketing by |trace|, which is invariant under a global phase, keeps the
// dedup lookups cheap.
long long trace_key(const ComplexMatrix& m) {
  return llround(std::abs(m.trace()) * 1e6);
}

struct ElementIndex {
  std::unordered_multimap<long long, int> buckets;

  int find(const std::vector<ComplexMatrix>& elements, const ComplexMatrix& m) const {
    const long long k = trace_key(m);
    for (long long key = k - 1; key <= k + 1; ++key) {
      auto [lo, hi] = buckets.equal_range(key);
      for (auto it = lo; it != hi; ++it)
        if (distance_up_to_phase(m, elements[it->second]) <= kDedupTol) return it->second;
    }
    return -1;
  }

  void add(const ComplexMatrix& m, int index) { buckets.emplace(trace_key(m), index); }
};

void validate_generators(const std::vector<ComplexMatrix>& generators) {
  if (generators.empty()) throw ValidationError("at least one generator required");
  const Eigen::Index d = generators.front().rows();
  if (d < 1) throw ValidationError("generators must have dimension >= 1");
  for (const ComplexMatrix& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw ValidationError("generators must be square matrices of equal dimension");
    if (!all_finite(g)) throw ValidationError("generator has non-finite entries");
    if (unitarity_defect(g) > 1e-10) throw ValidationError("generator not unitary");
  }
}

void build_tables(ProjectiveRep& rep, const ElementIndex& index) {
  const int n = rep.order();
  rep.mult.assign(n, std::vector<int>(n, -1));
  rep.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = index.find(rep.elements, rep.elements[i] * rep.elements[j]);
      if (k < 0) throw std::logic_error("closure violated while building the product table");
      rep.mult[i][j] = k;
      if (k == 0) rep.inverse[i] = j;
    }
  for (int i = 0; i < n; ++i)
    if (rep.inverse[i] < 0) throw std::logic_error("element without inverse");
}

}  // namespace

ProjectiveRep close_group(const std::vector<ComplexMatrix>& generators, int cap) {
  validate_generators(generators);
  const int d = static_cast<int>(generators.front().rows());

  ProjectiveRep rep;
  rep.dim = d;
  rep.elements.push_back(ComplexMatrix::Identity(d, d));

  ElementIndex index;
  index.add(rep.elements[0], 0);

  std::vector<ComplexMatrix> gens;
  gens.reserve(generators.size());
  for (const ComplexMatrix& g : generators) gens.push_back(phase_canonical(g));

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const ComplexMatrix& g : gens) {
      const ComplexMatrix p = rep.elements[u] * g;
      if (index.find(rep.elements, p) >= 0) continue;
      if (rep.order() >= cap) throw ValidationError("group too large or not finite");
      rep.elements.push_back(phase_canonical(p));
      index.add(rep.elements.back(), rep.order() - 1);
      queue.push_back(rep.order() - 1);
    }
  }

  build_tables(rep, index);
  return rep;
}

RepCheck is_projective_rep(const ProjectiveRep& rep) {
  RepCheck check;
  const int n = rep.order();
  if (n < 1 || rep.dim < 1 || static_cast<int>(rep.mult.size()) != n ||
      static_cast<int>(rep.inverse.size()) != n) {
    check.max_defect = 1.0;
    return check;
  }
  double worst = 0.0;
  bool structure_ok = true;
  worst = std::max(worst, distance_up_to_phase(
                              rep.elements[0], ComplexMatrix::Identity(rep.dim, rep.dim)));
  for (int i = 0; i < n && structure_ok; ++i) {
    if (rep.elements[i].rows() != rep.dim || rep.elements[i].cols() != rep.dim ||
        static_cast<int>(rep.mult[i].size()) != n) {
      structure_ok = false;
      break;
    }
    worst = std::max(worst, unitarity_defect(rep.elements[i]));
    if (rep.inverse[i] < 0 || rep.inverse[i] >= n || rep.mult[i][rep.inverse[i]] != 0)
      structure_ok = false;
  }
  if (structure_ok) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int k = rep.mult[i][j];
        if (k < 0 || k >= n) {
          structure_ok = false;
          break;
        }
        worst = std::max(
            worst, distance_up_to_phase(rep.elements[i] * rep.elements[j], rep.elements[k]));
      }
  }
  check.max_defect = worst;
  check.ok = structure_ok && worst <= 1e-9;
  return check;
}

ComplexMatrix twirl(const ProjectiveRep& rep, const ComplexMatrix& m) {
  if (m.rows() != rep.dim || m.cols() != rep.dim) throw ValidationError("dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (const ComplexMatrix& g : rep.elements) out += g * m * g.adjoint();
  return out / static_cast<double>(rep.order());
}

bool is_irreducible(const ProjectiveRep& rep) {
  const int d = rep.dim;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(a, b) = 1.0;
      ComplexMatrix expected = ComplexMatrix::Zero(d, d);
      if (a == b) expected = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
      if (max_abs(twirl(rep, unit) - expected) > 1e-9) return false;
    }
  return true;
}

OrbitTable orbit(const ProjectiveRep& rep, const DensityOperator& rho0) {
  if (rho0.dim() != rep.dim) throw ValidationError("dimension mismatch");
  OrbitTable table;
  table.states.push_back(rho0);

  auto find_state = [&table](const ComplexMatrix& m) {
    for (int s = 0; s < static_cast<int>(table.states.size()); ++s)
      if (max_abs(m - table.states[s].matrix()) <= kDedupTol) return s;
    return -1;
  };

  for (const ComplexMatrix& g : rep.elements) {
    const ComplexMatrix moved = g * rho0.matrix() * g.adjoint();
    if (find_state(moved) < 0) table.states.emplace_back(moved);
  }

  const int n = rep.order();
  table.action.assign(n, std::vector<int>(table.states.size(), -1));
  for (int gi = 0; gi < n; ++gi)
    for (int s = 0; s < static_cast<int>(table.states.size()); ++s) {
      const ComplexMatrix moved =
          rep.elements[gi] * table.states[s].matrix() * rep.elements[gi].adjoint();
      const int t = find_state(moved);
      if (t < 0) throw std::logic_error("orbit action left the orbit");
      table.action[gi][s] = t;
    }

  table.transitive = true;  // generated from a single seed
  if (n % static_cast<int>(table.states.size()) != 0)
    throw std::logic_error("orbit size does not divide the group order");
  table.stabilizer_order = n / static_cast<int>(table.states.size());
  return table;
}

ProjectiveRep tensor_power(const ProjectiveRep& rep, int k, int cap) {
  if (k < 1) throw ValidationError("tensor power requires k >= 1");
  if (k == 1) return rep;

  double projected = 1.0;
  for (int i = 0; i < k; ++i) projected *= rep.order();
  if (projected > static_cast<double>(cap))
    throw ValidationError("group too large for tensor power; use the additivity path");

  const int base = rep.order();
  const int total = static_cast<int>(projected + 0.5);

  ProjectiveRep out;
  out.dim = 1;
  for (int i = 0; i < k; ++i) {
    const std::int64_t next = static_cast<std::int64_t>(out.dim) * rep.dim;
    if (next * next > static_cast<std::int64_t>(kEntryCap))
      throw ValidationError("instance too large");
    out.dim = static_cast<int>(next);
  }

  std::vector<std::vector<int>> tuples(total, std::vector<int>(k, 0));
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx;
    for (int pos = k - 1; pos >= 0; --pos) {
      tuples[idx][pos] = rem % base;
      rem /= base;
    }
  }

  out.elements.reserve(total);
  for (int idx = 0; idx < total; ++idx) {
    ComplexMatrix m = rep.elements[tuples[idx][0]];
    for (int pos = 1; pos < k; ++pos) m = tensor(m, rep.elements[tuples[idx][pos]]);
    out.elements.push_back(phase_canonical(m));
  }

  out.mult.assign(total, std::vector<int>(total, 0));
  out.inverse.assign(total, 0);
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      int idx = 0;
      for (int pos = 0; pos < k; ++pos) idx = idx * base + rep.mult[tuples[i][pos]][tuples[j][pos]];
      out.mult[i][j] = idx;
    }
    int inv = 0;
    for (int pos = 0; pos < k; ++pos) inv = inv * base + rep.inverse[tuples[i][pos]];
    out.inverse[i] = inv;
  }
  return out;
}

Builtin builtin_from_name(const std::string& name) {
  if (name == "tetrahedral") return Builtin::tetrahedral;
  if (name == "pauli2") return Builtin::pauli2;
  if (name == "quaternion") return Builtin::quaternion;
  if (name == "reducible_demo") return Builtin::reducible_demo;
  throw ValidationError("unknown builtin: " + name);
}

const char* to_string(Builtin b) {
  switch (b) {
    case Builtin::tetrahedral: return "tetrahedral";
    case Builtin::pauli2: return "pauli2";
    case Builtin::quaternion: return "quaternion";
    case Builtin::reducible_demo: return "reducible_demo";
  }
  return "?";
}

std::vector<std::string> builtin_names() {
  return {"tetrahedral", "pauli2", "quaternion", "reducible_demo"};
}

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

// Rotation by 2*pi/3 about the z axis (up to phase): fixes the pole state and
// cycles the three lower vertices.
ComplexMatrix tetra_gen_a() {
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = omega;
  return a;
}

// Rotation by pi about the Bloch axis bisecting the pole vertex and the
// azimuth-zero lower vertex: swaps those two states.
ComplexMatrix tetra_gen_b() {
  const Complex minus_i{0.0, -1.0};
  return minus_i * (std::sqrt(2.0 / 3.0) * pauli_x() + std::sqrt(1.0 / 3.0) * pauli_z());
}

// The four vertex states: pole at |0>, lower ring at azimuths 0, 120, 240
// degrees, every pairwise squared overlap 1/3.
std::vector<StateVector> tetra_states() {
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const double c = std::sqrt(1.0 / 3.0);
  const double s = std::sqrt(2.0 / 3.0);
  std::vector<StateVector> states;
  ComplexVector v(2);
  v << 1, 0;
  states.emplace_back(v);
  v << c, s;
  states.emplace_back(v);
  v << c, s * omega;
  states.emplace_back(v);
  v << c, s * omega * omega;
  states.emplace_back(v);
  return states;
}

void verify_orbit_matches(const ProjectiveRep& rep, const std::vector<StateVector>& label_states,
                          const char* name) {
  const OrbitTable table = orbit(rep, DensityOperator::pure(label_states.front()));
  if (table.states.size() != label_states.size())
    throw std::logic_error(std::string("builtin ") + name + ": unexpected orbit size");
  for (std::size_t j = 0; j < label_states.size(); ++j) {
    const ComplexMatrix target = DensityOperator::pure(label_states[j]).matrix();
    if (max_abs(table.states[j].matrix() - target) > 1e-8)
      throw std::logic_error(std::string("builtin ") + name +
                             ": orbit does not reproduce the printed states in label order");
  }
}

}  // namespace

BuiltinProtocol builtin_rep(Builtin which) {
  switch (which) {
    case Builtin::tetrahedral: {
      BuiltinProtocol b;
      b.rep = close_group({tetra_gen_a(), tetra_gen_b()});
      b.label_states = tetra_states();
      b.fiducial = b.label_states.front();
      b.bits_per_copy = 2;
      if (b.rep.order() != 12) throw std::logic_error("builtin tetrahedral: order != 12");
      if (!is_irreducible(b.rep)) throw std::logic_error("builtin tetrahedral: reducible");
      verify_orbit_matches(b.rep, b.label_states, "tetrahedral");
      return b;
    }
    case Builtin::pauli2: {
      BuiltinProtocol b;
      b.rep = close_group({pauli_x(), pauli_z()});
      ComplexVector zero(2), one(2);
      zero << 1, 0;
      one << 0, 1;
      b.label_states = {StateVector(zero), StateVector(one)};
      b.fiducial = b.label_states.front();
      b.bits_per_copy = 1;
      if (b.rep.order() != 4) throw std::logic_error("builtin pauli2: order != 4");
      if (!is_irreducible(b.rep)) throw std::logic_error("builtin pauli2: reducible");
      verify_orbit_matches(b.rep, b.label_states, "pauli2");
      return b;
    }
    case Builtin::quaternion: {
      BuiltinProtocol b;
      const Complex i{0.0, 1.0};
      b.rep = close_group({i * pauli_x(), i * pauli_z()});
      b.fiducial = std::nullopt;  // caller supplies the seed state
      b.bits_per_copy = 1;
      if (b.rep.order() != 4) throw std::logic_error("builtin quaternion: order != 4");
      if (!is_irreducible(b.rep)) throw std::logic_error("builtin quaternion: reducible");
      return b;
    }
    case Builtin::reducible_demo: {
      BuiltinProtocol b;
      const ComplexMatrix a = tetra_gen_a();
      const ComplexMatrix gb = tetra_gen_b();
      ComplexMatrix a2 = ComplexMatrix::Zero(4, 4), b2 = ComplexMatrix::Zero(4, 4);
      a2.block(0, 0, 2, 2) = a;
      a2.block(2, 2, 2, 2) = a;
      b2.block(0, 0, 2, 2) = gb;
      b2.block(2, 2, 2, 2) = gb;
      b.rep = close_group({a2, b2});
      ComplexVector v = ComplexVector::Zero(4);
      v(0) = 1.0;
      b.fiducial = StateVector(v);
      b.bits_per_copy = 2;
      if (b.rep.order() != 12) throw std::logic_error("builtin reducible_demo: order != 12");
      if (is_irreducible(b.rep)) throw std::logic_error("builtin reducible_demo: irreducible");
      return b;
    }
  }
  throw ValidationError("unknown builtin");
}

BuiltinProtocol builtin_rep(const std::string& name) { return builtin_rep(builtin_from_name(name)); }

}  // namespace qsc
