#include "qsc/analysis.hpp"

#include <cmath>

namespace qsc {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::classical_equivalent: return "classical_equivalent";
    case Classification::nontrivial: return "nontrivial";
    case Classification::mixed_state_unclassified: return "mixed_state_unclassified";
  }
  return "?";
}

bool orthogonality_check(const std::vector<DensityOperator>& states) {
  if (states.empty()) throw ValidationError("orthogonality check requires at least one state");
  for (const DensityOperator& s : states) {
    const std::vector<double> eigs = density_eigenvalues(s);
    if (eigs.front() < 1.0 - 1e-9)
      throw ValidationError("orthogonality dichotomy applies to pure states only");
  }
  for (std::size_t x = 0; x < states.size(); ++x)
    for (std::size_t y = x + 1; y < states.size(); ++y) {
      const double overlap = (states[x].matrix() * states[y].matrix()).trace().real();
      if (overlap > 1e-9) return false;
    }
  return true;
}

ProtocolReport classify(const QscProtocol& p, const AnalyzeOptions& opts) {
  ProtocolReport report;
  report.n = p.n;
  report.d = p.total_dim();

  report.group_order = 1;
  for (int c = 0; c < p.copies; ++c) {
    const std::uint64_t next = report.group_order * static_cast<std::uint64_t>(p.rep.order());
    if (next / static_cast<std::uint64_t>(p.rep.order()) != report.group_order)
      throw ValidationError("instance too large");
    report.group_order = next;
  }

  const BindingReport bound = binding_bound(p);
  report.eigenvalues = bound.eigenvalues;
  report.sum_bound = bound.sum_bound;
  report.a_bits = bound.a_bits;
  report.renyi_a_bits = bound.renyi_a_bits;

  report.attack_sum = evaluate_strategy(p, me_attack(p)).total;

  const ConcealingReport concealing =
      concealing_bits(p, opts.concealing_mode, opts.restarts, opts.seed);
  report.i_acc_bits = concealing.i_acc_bits;
  report.b_bits = concealing.b_bits;
  report.concealing_method = concealing.method;

  report.margin = static_cast<double>(p.n) - (report.a_bits + report.b_bits);

  if (!p.pure_states()) {
    report.classification = Classification::mixed_state_unclassified;
    return report;
  }
  const bool orthogonal = orthogonality_check(p.orbit.states);
  if (orthogonal) {
    report.classification = Classification::classical_equivalent;
  } else {
    if (report.margin <= 0.0)
      throw std::logic_error("dichotomy violation: nonorthogonal pure protocol with "
                             "nonpositive margin");
    report.classification = Classification::nontrivial;
  }
  return report;
}

}  // namespace qsc
