#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/analysis.hpp"

namespace qsc {

// Analysis report plus the CLI-level extras. Serializes with a fixed field
// order and 12-significant-digit reals so reports diff cleanly.
struct AnalysisDocument {
  ProtocolReport report;
  std::optional<double> search_best_sum;
  std::uint64_t seed = 0;
};

std::string to_json(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);

struct AttackDocument {
  std::vector<std::pair<std::string, double>> p_tilde;  // by bit string, ascending
  double sum = 0.0;
  double bound = 0.0;
  double reduced_state_distance = 0.0;  // max-norm distance of Tr_A |Psi><Psi| from I/d
};

std::string to_json(const AttackDocument& doc);
std::string to_text(const AttackDocument& doc);

// %.12g
std::string format_real(double v);

}  // namespace qsc
