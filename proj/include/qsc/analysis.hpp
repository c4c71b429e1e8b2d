#pragma once

#include <cstdint>
#include <vector>

#include "qsc/binding.hpp"
#include "qsc/concealing.hpp"
#include "qsc/protocol.hpp"

namespace qsc {

enum class Classification { classical_equivalent, nontrivial, mixed_state_unclassified };
const char* to_string(Classification c);

struct ProtocolReport {
  int n = 0;
  std::int64_t d = 0;                   // full commitment dimension
  std::uint64_t group_order = 0;        // order of the full covariance group
  std::vector<double> eigenvalues;
  double sum_bound = 0.0;
  double a_bits = 0.0;
  double renyi_a_bits = 0.0;
  double attack_sum = 0.0;
  double i_acc_bits = 0.0;
  double b_bits = 0.0;
  ConcealingMethod concealing_method = ConcealingMethod::additivity;
  Classification classification = Classification::mixed_state_unclassified;
  double margin = 0.0;                  // n - (a_bits + b_bits)
};

// True iff all pairwise overlaps vanish (1e-9). Requires pure states (rank 1
// within 1e-9) and refuses mixed input.
bool orthogonality_check(const std::vector<DensityOperator>& states);

struct AnalyzeOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  ConcealingMethod concealing_mode = ConcealingMethod::additivity;
};

// Full pipeline: exact binding bound, saturating attack, concealing bound,
// and the pure-state dichotomy (orthogonal -> classical_equivalent, else
// nontrivial). Mixed-state protocols keep their margin but are left
// unclassified. margin always uses the analytic bound, never the search.
ProtocolReport classify(const QscProtocol& p, const AnalyzeOptions& opts = {});

}  // namespace qsc
