#pragma once

#include <cstdint>
#include <vector>

#include "qsc/protocol.hpp"

namespace qsc {

// A cheating commitment: a bipartite state on ancilla (x) B plus, per string,
// a reveal operation {E_xi} with sum E^dag E = I on the ancilla.
struct AttackStrategy {
  StateVector committed;  // dim_ancilla * total B dimension
  int dim_ancilla = 1;
  std::vector<std::vector<ComplexMatrix>> reveal_ops;  // indexed by string value
};

struct BindingReport {
  std::vector<double> eigenvalues;  // full-protocol spectrum of any rho_x, descending
  double sum_bound = 0.0;           // exact bound on sum_x p~_x
  double a_bits = 0.0;              // log2(sum_bound)
  double renyi_a_bits = 0.0;        // n - [S(I/d) - S_1/2(rho_0)], entropy route
  double attack_sum = 0.0;          // filled once an attack is evaluated
};

// Exact bound (2^n / d) (sum_a sqrt(lambda_a))^2 for covariant protocols.
// The k-copy spectrum is the k-fold product multiset of the single-copy one.
BindingReport binding_bound(const QscProtocol& p);

// Same bound through entropies of materialized operators; must agree with
// log2(binding_bound) to 1e-9.
double renyi_bound(const QscProtocol& p);

// The saturating attack: commit the maximally entangled state, reveal with
// the polar unitary of the reshaped honest purification.
AttackStrategy me_attack(const QscProtocol& p);

struct StrategyEvaluation {
  std::vector<double> p_tilde;  // per string value
  double total = 0.0;
};

StrategyEvaluation evaluate_strategy(const QscProtocol& p, const AttackStrategy& s);

// Numerical adversary: multi-start alternating ascent over the committed
// state and per-string unitary reveal operators. Deterministic given seed;
// returns the best sum found. Total dimension capped at 64.
double strategy_search(const QscProtocol& p, int restarts, std::uint64_t seed);

}  // namespace qsc
