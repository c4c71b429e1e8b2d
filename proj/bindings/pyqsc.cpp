#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsc/analysis.hpp"
#include "qsc/binding.hpp"
#include "qsc/concealing.hpp"
#include "qsc/group.hpp"
#include "qsc/linalg.hpp"
#include "qsc/protocol.hpp"
#include "qsc/spec_file.hpp"

namespace py = pybind11;

namespace {

std::vector<qsc::DensityOperator> wrap_states(const std::vector<qsc::ComplexMatrix>& matrices) {
  std::vector<qsc::DensityOperator> out;
  out.reserve(matrices.size());
  for (const qsc::ComplexMatrix& m : matrices) out.emplace_back(m);
  return out;
}

qsc::ConcealingMethod method_from_string(const std::string& mode) {
  if (mode == "additivity") return qsc::ConcealingMethod::additivity;
  if (mode == "direct") return qsc::ConcealingMethod::direct;
  throw qsc::ValidationError("concealing mode must be 'additivity' or 'direct'");
}

}  // namespace

PYBIND11_MODULE(pyqsc, m) {
  m.doc() = "Covariant quantum string commitment analysis";

  py::register_exception<qsc::ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<qsc::StateVector>(m, "StateVector")
      .def(py::init<qsc::ComplexVector>())
      .def_property_readonly("dim", &qsc::StateVector::dim)
      .def_property_readonly("amplitudes", &qsc::StateVector::amplitudes);

  py::class_<qsc::DensityOperator>(m, "DensityOperator")
      .def(py::init<qsc::ComplexMatrix>())
      .def_static("pure", &qsc::DensityOperator::pure)
      .def_property_readonly("dim", &qsc::DensityOperator::dim)
      .def_property_readonly("matrix", &qsc::DensityOperator::matrix);

  py::class_<qsc::ProjectiveRep>(m, "ProjectiveRep")
      .def_readonly("dim", &qsc::ProjectiveRep::dim)
      .def_readonly("elements", &qsc::ProjectiveRep::elements)
      .def_readonly("mult", &qsc::ProjectiveRep::mult)
      .def_readonly("inverse", &qsc::ProjectiveRep::inverse)
      .def_property_readonly("order", &qsc::ProjectiveRep::order);

  py::class_<qsc::OrbitTable>(m, "OrbitTable")
      .def_readonly("states", &qsc::OrbitTable::states)
      .def_readonly("action", &qsc::OrbitTable::action)
      .def_readonly("transitive", &qsc::OrbitTable::transitive)
      .def_readonly("stabilizer_order", &qsc::OrbitTable::stabilizer_order);

  py::class_<qsc::BuiltinProtocol>(m, "BuiltinProtocol")
      .def_readonly("rep", &qsc::BuiltinProtocol::rep)
      .def_readonly("fiducial", &qsc::BuiltinProtocol::fiducial)
      .def_readonly("bits_per_copy", &qsc::BuiltinProtocol::bits_per_copy)
      .def_readonly("label_states", &qsc::BuiltinProtocol::label_states);

  py::class_<qsc::QscProtocol>(m, "QscProtocol")
      .def_readonly("rep", &qsc::QscProtocol::rep)
      .def_readonly("orbit", &qsc::QscProtocol::orbit)
      .def_readonly("copies", &qsc::QscProtocol::copies)
      .def_readonly("bits_per_copy", &qsc::QscProtocol::bits_per_copy)
      .def_readonly("n", &qsc::QscProtocol::n)
      .def_readonly("label_to_state", &qsc::QscProtocol::label_to_state)
      .def_readonly("single_copy_eigenvalues", &qsc::QscProtocol::single_copy_eigenvalues)
      .def_property_readonly("total_dim", &qsc::QscProtocol::total_dim)
      .def_property_readonly("pure_states", &qsc::QscProtocol::pure_states);

  py::class_<qsc::AttackStrategy>(m, "AttackStrategy")
      .def_readonly("committed", &qsc::AttackStrategy::committed)
      .def_readonly("dim_ancilla", &qsc::AttackStrategy::dim_ancilla)
      .def_readonly("reveal_ops", &qsc::AttackStrategy::reveal_ops);

  py::class_<qsc::BindingReport>(m, "BindingReport")
      .def_readonly("eigenvalues", &qsc::BindingReport::eigenvalues)
      .def_readonly("sum_bound", &qsc::BindingReport::sum_bound)
      .def_readonly("a_bits", &qsc::BindingReport::a_bits)
      .def_readonly("renyi_a_bits", &qsc::BindingReport::renyi_a_bits);

  py::class_<qsc::Povm>(m, "Povm")
      .def(py::init<std::vector<qsc::ComplexMatrix>>())
      .def_property_readonly("effects", &qsc::Povm::effects)
      .def_property_readonly("dim", &qsc::Povm::dim);

  py::class_<qsc::ConcealingReport>(m, "ConcealingReport")
      .def_readonly("i_acc_bits", &qsc::ConcealingReport::i_acc_bits)
      .def_readonly("phi_star", &qsc::ConcealingReport::phi_star)
      .def_readonly("b_bits", &qsc::ConcealingReport::b_bits)
      .def_property_readonly("method",
                             [](const qsc::ConcealingReport& r) { return qsc::to_string(r.method); });

  py::class_<qsc::ProtocolReport>(m, "ProtocolReport")
      .def_readonly("n", &qsc::ProtocolReport::n)
      .def_readonly("d", &qsc::ProtocolReport::d)
      .def_readonly("group_order", &qsc::ProtocolReport::group_order)
      .def_readonly("eigenvalues", &qsc::ProtocolReport::eigenvalues)
      .def_readonly("sum_bound", &qsc::ProtocolReport::sum_bound)
      .def_readonly("a_bits", &qsc::ProtocolReport::a_bits)
      .def_readonly("renyi_a_bits", &qsc::ProtocolReport::renyi_a_bits)
      .def_readonly("attack_sum", &qsc::ProtocolReport::attack_sum)
      .def_readonly("i_acc_bits", &qsc::ProtocolReport::i_acc_bits)
      .def_readonly("b_bits", &qsc::ProtocolReport::b_bits)
      .def_readonly("margin", &qsc::ProtocolReport::margin)
      .def_property_readonly("concealing_method",
                             [](const qsc::ProtocolReport& r) { return qsc::to_string(r.concealing_method); })
      .def_property_readonly("classification",
                             [](const qsc::ProtocolReport& r) { return qsc::to_string(r.classification); })
      .def("__repr__", [](const qsc::ProtocolReport& r) {
        return "<ProtocolReport n=" + std::to_string(r.n) + " a=" + std::to_string(r.a_bits) +
               " b=" + std::to_string(r.b_bits) + " " + qsc::to_string(r.classification) + ">";
      });

  // dense algebra
  m.def("tensor",
        [](const qsc::ComplexMatrix& a, const qsc::ComplexMatrix& b) { return qsc::tensor(a, b); });
  m.def("partial_trace",
        [](const qsc::ComplexMatrix& rho, int dim_a, int dim_b, const std::string& keep) {
          const qsc::Subsystem s = (keep == "A") ? qsc::Subsystem::A : qsc::Subsystem::B;
          return qsc::partial_trace(qsc::DensityOperator(rho), dim_a, dim_b, s).matrix();
        },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("keep") = "B");
  m.def("eig_hermitian", [](const qsc::ComplexMatrix& h) {
    const qsc::EigenSystem es = qsc::eig_hermitian(h);
    return std::make_pair(es.values, es.vectors);
  });
  m.def("schmidt", [](const qsc::ComplexVector& psi, int dim_a, int dim_b) {
    const qsc::SchmidtDecomposition s = qsc::schmidt(qsc::StateVector(psi), dim_a, dim_b);
    return std::make_tuple(s.coefficients, s.basis_a, s.basis_b);
  });
  m.def("entropy",
        [](const qsc::ComplexMatrix& rho, double alpha) {
          return qsc::entropy(qsc::DensityOperator(rho), alpha);
        },
        py::arg("rho"), py::arg("alpha") = 1.0);

  // groups
  m.def("close_group", &qsc::close_group, py::arg("generators"), py::arg("cap") = qsc::kGroupCap);
  m.def("is_projective_rep", [](const qsc::ProjectiveRep& rep) {
    const qsc::RepCheck c = qsc::is_projective_rep(rep);
    return std::make_pair(c.ok, c.max_defect);
  });
  m.def("is_irreducible", &qsc::is_irreducible);
  m.def("twirl", &qsc::twirl);
  m.def("orbit", [](const qsc::ProjectiveRep& rep, const qsc::ComplexMatrix& rho0) {
    return qsc::orbit(rep, qsc::DensityOperator(rho0));
  });
  m.def("tensor_power", &qsc::tensor_power, py::arg("rep"), py::arg("k"),
        py::arg("cap") = qsc::kGroupCap);
  m.def("builtin", [](const std::string& name) { return qsc::builtin_rep(name); });
  m.def("builtin_names", &qsc::builtin_names);

  // protocols
  m.def("build_protocol",
        [](const qsc::ProjectiveRep& rep, const qsc::ComplexMatrix& fiducial, int copies,
           const std::vector<qsc::ComplexVector>& label_states) {
          std::vector<qsc::StateVector> labels;
          labels.reserve(label_states.size());
          for (const qsc::ComplexVector& v : label_states) labels.emplace_back(v);
          return qsc::build_protocol(rep, qsc::DensityOperator(fiducial), copies, labels);
        },
        py::arg("rep"), py::arg("fiducial"), py::arg("copies") = 1,
        py::arg("label_states") = std::vector<qsc::ComplexVector>{});
  m.def("builtin_protocol",
        [](const std::string& name, int copies, const std::optional<qsc::ComplexMatrix>& fiducial) {
          const qsc::BuiltinProtocol b = qsc::builtin_rep(name);
          if (fiducial)
            return qsc::build_protocol(b.rep, qsc::DensityOperator(*fiducial), copies);
          if (!b.fiducial)
            throw qsc::ValidationError("builtin '" + name + "' requires an explicit fiducial");
          return qsc::build_protocol(b.rep, qsc::DensityOperator::pure(*b.fiducial), copies,
                                     b.label_states);
        },
        py::arg("name"), py::arg("copies") = 1, py::arg("fiducial") = std::nullopt);
  m.def("commitment_state", [](const qsc::QscProtocol& p, const std::string& bits) {
    return qsc::commitment_state(p, bits).matrix();
  });
  m.def("honest_run", &qsc::honest_run);
  m.def("from_lockcom", [](int n, const std::vector<qsc::ComplexMatrix>& unitaries) {
    const qsc::PurifiedFamily family = qsc::from_lockcom(qsc::LockcomSpec{n, unitaries});
    std::vector<qsc::ComplexVector> states;
    states.reserve(family.states.size());
    for (const qsc::StateVector& s : family.states) states.push_back(s.amplitudes());
    return std::make_tuple(family.dim_a, family.dim_b, states);
  });

  // binding
  m.def("binding_bound", &qsc::binding_bound);
  m.def("renyi_bound", &qsc::renyi_bound);
  m.def("me_attack", &qsc::me_attack);
  m.def("evaluate_strategy", [](const qsc::QscProtocol& p, const qsc::AttackStrategy& s) {
    const qsc::StrategyEvaluation e = qsc::evaluate_strategy(p, s);
    return std::make_pair(e.p_tilde, e.total);
  });
  m.def("strategy_search", &qsc::strategy_search, py::arg("protocol"), py::arg("restarts") = 50,
        py::arg("seed") = 0);

  // concealing
  m.def("davies_value",
        [](const qsc::ProjectiveRep& rep, const qsc::OrbitTable& orbit, const qsc::ComplexVector& phi) {
          return qsc::davies_value(rep, orbit, qsc::StateVector(phi));
        });
  m.def("maximize_accessible_info", &qsc::maximize_accessible_info, py::arg("rep"),
        py::arg("orbit"), py::arg("restarts") = 64, py::arg("seed") = 0);
  m.def("covariant_povm",
        [](const qsc::ProjectiveRep& rep, const qsc::ComplexVector& phi) {
          return qsc::covariant_povm(rep, qsc::StateVector(phi)).effects();
        });
  m.def("mutual_info_povm",
        [](const std::vector<qsc::ComplexMatrix>& states, const std::vector<qsc::ComplexMatrix>& effects) {
          return qsc::mutual_info_povm(wrap_states(states), qsc::Povm(effects));
        });
  m.def("concealing_bits",
        [](const qsc::QscProtocol& p, const std::string& mode, int restarts, std::uint64_t seed) {
          return qsc::concealing_bits(p, method_from_string(mode), restarts, seed);
        },
        py::arg("protocol"), py::arg("mode") = "additivity", py::arg("restarts") = 64,
        py::arg("seed") = 0);

  // analysis
  m.def("orthogonality_check", [](const std::vector<qsc::ComplexMatrix>& states) {
    return qsc::orthogonality_check(wrap_states(states));
  });
  m.def("classify",
        [](const qsc::QscProtocol& p, int restarts, std::uint64_t seed, const std::string& mode) {
          qsc::AnalyzeOptions opts;
          opts.restarts = restarts;
          opts.seed = seed;
          opts.concealing_mode = method_from_string(mode);
          return qsc::classify(p, opts);
        },
        py::arg("protocol"), py::arg("restarts") = 64, py::arg("seed") = 0,
        py::arg("mode") = "additivity");
}
