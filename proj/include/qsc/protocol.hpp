#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/group.hpp"
#include "qsc/linalg.hpp"

namespace qsc {

// Purified state on H_A (x) H_B, A index major.
struct Purification {
  StateVector psi;
  int dim_a = 1;
  int dim_b = 1;
};

// A string-commitment protocol: k tensor copies of a covariant single-copy
// ensemble, with bit labels attached to the orbit states. Immutable after
// build.
struct QscProtocol {
  ProjectiveRep rep;    // single copy
  OrbitTable orbit;     // single copy, seeded from the fiducial
  int copies = 1;
  int bits_per_copy = 0;
  int n = 0;            // copies * bits_per_copy
  std::vector<int> label_to_state;  // 2^bits_per_copy entries, label 0 -> state 0
  std::vector<int> state_to_label;
  std::vector<double> single_copy_eigenvalues;  // shared spectrum, descending
  std::vector<Purification> copy_purifications;  // one per orbit state

  int copy_dim() const { return rep.dim; }
  std::int64_t total_dim() const;
  bool pure_states() const;
};

// Requires an irreducible rep and a power-of-two orbit. label_states, when
// nonempty, pins the bit labeling (entry j must match an orbit state; entry 0
// must be the fiducial); otherwise labels follow discovery order.
QscProtocol build_protocol(const ProjectiveRep& rep, const DensityOperator& fiducial, int copies,
                           const std::vector<StateVector>& label_states = {});

int label_of_bits(const std::string& bits);
std::string bits_of_label(int label, int width);

DensityOperator commitment_state(const QscProtocol& p, const std::string& bits);

// Minimal purification of the full commitment state (dim_a = rank).
Purification honest_purification(const QscProtocol& p, const std::string& bits);

// Honest commit + reveal, scored by Bob's projective test on psi_x. Equals 1
// up to rounding; kept as an executable completeness check.
double honest_run(const QscProtocol& p, const std::string& bits);

struct LockcomSpec {
  int n = 0;
  std::vector<ComplexMatrix> unitaries;  // on dimension 2^n
};

struct PurifiedFamily {
  int dim_a = 1;
  int dim_b = 1;
  std::vector<StateVector> states;  // indexed by the committed string value
};

// psi_x = (1/sqrt(R)) sum_i |i>_A (x) U_i |x>_B; the trivial A factor is
// elided when R = 1. Output is an unlabeled family: covariance is not
// implied and must be checked before feeding the binding machinery.
PurifiedFamily from_lockcom(const LockcomSpec& spec);

}  // namespace qsc
