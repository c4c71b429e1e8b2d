#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsc/linalg.hpp"

namespace qsc {

inline constexpr int kGroupCap = 10000;

// Finite unitary matrix group with elements deduplicated up to a global
// phase. Element 0 is the identity; mult[i][j] is the index of
// elements[i]*elements[j] up to phase.
struct ProjectiveRep {
  int dim = 0;
  std::vector<ComplexMatrix> elements;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;

  int order() const { return static_cast<int>(elements.size()); }
};

// Breadth-first closure from the identity, multiplying by the generators in
// the order given. Throws "group too large or not finite" past cap.
ProjectiveRep close_group(const std::vector<ComplexMatrix>& generators, int cap = kGroupCap);

struct RepCheck {
  bool ok = false;
  double max_defect = 0.0;
};

// Diagnostic: verifies every product lands on its multiplication-table entry
// up to phase (1e-9), plus identity/inverse/unitarity consistency.
RepCheck is_projective_rep(const ProjectiveRep& rep);

// Group average (1/|G|) sum_g D(g) M D(g)^dag.
ComplexMatrix twirl(const ProjectiveRep& rep, const ComplexMatrix& m);

// Schur test: the twirl of every matrix unit must collapse to (tr/d) I.
bool is_irreducible(const ProjectiveRep& rep);

struct OrbitTable {
  std::vector<DensityOperator> states;   // discovery order, seed first
  std::vector<std::vector<int>> action;  // action[g][s] -> index of D(g) rho_s D(g)^dag
  bool transitive = true;
  int stabilizer_order = 0;
};

OrbitTable orbit(const ProjectiveRep& rep, const DensityOperator& rho0);

// All k-fold tensor products, elements in lexicographic order of the index
// tuple (first factor most significant); tables are componentwise.
ProjectiveRep tensor_power(const ProjectiveRep& rep, int k, int cap = kGroupCap);

enum class Builtin { tetrahedral, pauli2, quaternion, reducible_demo };

Builtin builtin_from_name(const std::string& name);
const char* to_string(Builtin b);
std::vector<std::string> builtin_names();

struct BuiltinProtocol {
  ProjectiveRep rep;
  std::optional<StateVector> fiducial;  // quaternion leaves this to the caller
  int bits_per_copy = 0;
  // States in canonical bit-label order (empty when the builtin does not pin
  // a labeling). The builder verifies these against the orbit.
  std::vector<StateVector> label_states;
};

BuiltinProtocol builtin_rep(Builtin which);
BuiltinProtocol builtin_rep(const std::string& name);

}  // namespace qsc
