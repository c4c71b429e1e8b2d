#pragma once

#include <cstdint>
#include <vector>

#include "qsc/protocol.hpp"

namespace qsc {

// Positive effects summing to the identity (completeness within 1e-9,
// effect eigenvalues >= -1e-10), checked at construction.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects);
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  int dim() const;

 private:
  std::vector<ComplexMatrix> effects_;
};

enum class ConcealingMethod { additivity, direct };
const char* to_string(ConcealingMethod m);

struct ConcealingReport {
  double i_acc_bits = 0.0;   // accessible information of the maximized ensemble
  StateVector phi_star;      // maximizing seed vector
  double b_bits = 0.0;       // concealing bound for the full n-bit protocol
  ConcealingMethod method = ConcealingMethod::direct;
};

// log2 d + (d/|G|) sum_g <phi|rho_g|phi> log2 <phi|rho_g|phi> with
// rho_g = D(g) rho_0 D(g)^dag. Requires an irreducible rep.
double davies_value(const ProjectiveRep& rep, const OrbitTable& orbit, const StateVector& phi);

// Multi-start ascent over unit seed vectors (basis starts first, then seeded
// random starts). Deterministic given seed; nondecreasing in restarts.
ConcealingReport maximize_accessible_info(const ProjectiveRep& rep, const OrbitTable& orbit,
                                          int restarts, std::uint64_t seed);

// Effects (d/|G|) D(g)|phi><phi|D(g)^dag; complete exactly when the rep is
// irreducible, and refuses otherwise.
Povm covariant_povm(const ProjectiveRep& rep, const StateVector& phi);

// Classical mutual information (bits) of the channel induced by measuring a
// uniform ensemble.
double mutual_info_povm(const std::vector<DensityOperator>& states, const Povm& povm);

// additivity: k times the single-copy maximum. direct: maximize on the
// tensor-power rep (d^k <= 16, |G|^k <= 10000); slow, kept as a numeric
// corroboration of the additivity route.
ConcealingReport concealing_bits(const QscProtocol& p, ConcealingMethod mode, int restarts,
                                 std::uint64_t seed);

}  // namespace qsc
