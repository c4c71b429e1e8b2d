#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qsc/analysis.hpp"
#include "qsc/report.hpp"
#include "qsc/spec_file.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 64;

struct CommonFlags {
  std::string spec_path;
  std::string output;
  std::string format = "json";
};

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw qsc::IoError("cannot write report: " + output_path);
  out << content;
  if (!out) throw qsc::IoError("cannot write report: " + output_path);
}

int default_restarts(const qsc::ProtocolSpec& spec, const std::optional<int>& flag) {
  if (flag) return *flag;
  if (spec.restarts) return *spec.restarts;
  if (const char* env = std::getenv("QSC_RESTARTS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 64;
}

std::uint64_t default_seed(const qsc::ProtocolSpec& spec, const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (spec.seed) return *spec.seed;
  return 0;
}

int run_analyze(const CommonFlags& flags, bool search, bool direct_concealing,
                const std::optional<int>& restarts_flag,
                const std::optional<std::uint64_t>& seed_flag) {
  const qsc::ProtocolSpec spec = qsc::load_protocol_spec(flags.spec_path);
  const qsc::QscProtocol protocol = qsc::realize_protocol(spec);

  qsc::AnalyzeOptions opts;
  opts.restarts = default_restarts(spec, restarts_flag);
  opts.seed = default_seed(spec, seed_flag);
  opts.concealing_mode =
      direct_concealing ? qsc::ConcealingMethod::direct : qsc::ConcealingMethod::additivity;

  qsc::AnalysisDocument doc;
  doc.report = qsc::classify(protocol, opts);
  doc.seed = opts.seed;
  if (search) {
    const int search_restarts = restarts_flag ? *restarts_flag : (spec.restarts ? *spec.restarts : 50);
    doc.search_best_sum = qsc::strategy_search(protocol, search_restarts, opts.seed);
  }

  emit(flags.format == "text" ? qsc::to_text(doc) : qsc::to_json(doc), flags.output);
  return 0;
}

int run_attack(const CommonFlags& flags) {
  const qsc::ProtocolSpec spec = qsc::load_protocol_spec(flags.spec_path);
  const qsc::QscProtocol protocol = qsc::realize_protocol(spec);

  const qsc::BindingReport bound = qsc::binding_bound(protocol);
  const qsc::AttackStrategy attack = qsc::me_attack(protocol);
  const qsc::StrategyEvaluation eval = qsc::evaluate_strategy(protocol, attack);

  const int d = static_cast<int>(protocol.total_dim());
  const qsc::DensityOperator committed = qsc::DensityOperator::pure(attack.committed);
  const qsc::DensityOperator reduced =
      qsc::partial_trace(committed, attack.dim_ancilla, d, qsc::Subsystem::B);

  qsc::AttackDocument doc;
  for (std::size_t x = 0; x < eval.p_tilde.size(); ++x)
    doc.p_tilde.emplace_back(qsc::bits_of_label(static_cast<int>(x), protocol.n),
                             eval.p_tilde[x]);
  doc.sum = eval.total;
  doc.bound = bound.sum_bound;
  doc.reduced_state_distance = qsc::max_abs(
      reduced.matrix() - qsc::ComplexMatrix::Identity(d, d) / static_cast<double>(d));

  emit(flags.format == "text" ? qsc::to_text(doc) : qsc::to_json(doc), flags.output);
  return 0;
}

int run_list(const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << "[\n";
    const std::vector<std::string> names = qsc::builtin_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const qsc::BuiltinProtocol b = qsc::builtin_rep(names[i]);
      out << "  {\"name\": \"" << names[i] << "\", \"group_order\": " << b.rep.order()
          << ", \"dim\": " << b.rep.dim << ", \"bits_per_copy\": " << b.bits_per_copy << "}"
          << (i + 1 < names.size() ? ",\n" : "\n");
    }
    out << "]\n";
  } else {
    for (const std::string& name : qsc::builtin_names()) {
      const qsc::BuiltinProtocol b = qsc::builtin_rep(name);
      out << name << "  |G|=" << b.rep.order() << "  d=" << b.rep.dim
          << "  bits_per_copy=" << b.bits_per_copy << '\n';
    }
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant quantum string commitment analyzer"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, attack_flags;
  bool search = false, direct_concealing = false;
  std::optional<int> restarts_flag;
  std::optional<std::uint64_t> seed_flag;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Compute binding/concealing bounds, the saturating attack, and the classification");
  analyze->add_option("spec", analyze_flags.spec_path, "protocol definition file")->required();
  analyze->add_option("-o,--output", analyze_flags.output, "report path (default: stdout)");
  analyze->add_option("--format", analyze_flags.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--search", search, "also run the numerical strategy search");
  analyze->add_flag("--direct-concealing", direct_concealing,
                    "maximize on the tensor-power ensemble instead of using additivity (slow)");
  analyze->add_option("--restarts", [&restarts_flag](const CLI::results_t& res) {
    restarts_flag = std::stoi(res[0]);
    return true;
  }, "optimizer restart count");
  analyze->add_option("--seed", [&seed_flag](const CLI::results_t& res) {
    seed_flag = std::stoull(res[0]);
    return true;
  }, "optimizer seed");

  CLI::App* attack = app.add_subcommand(
      "attack", "Run the maximally entangled attack and trace the per-string success");
  attack->add_option("spec", attack_flags.spec_path, "protocol definition file")->required();
  attack->add_option("-o,--output", attack_flags.output, "trace path (default: stdout)");
  attack->add_option("--format", attack_flags.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string list_format = "text";
  CLI::App* list = app.add_subcommand("list", "List the builtin protocols");
  list->add_option("--format", list_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed())
      return run_analyze(analyze_flags, search, direct_concealing, restarts_flag, seed_flag);
    if (attack->parsed()) return run_attack(attack_flags);
    return run_list(list_format);
  } catch (const qsc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const qsc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitIo;
  }
}
