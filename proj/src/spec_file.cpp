#include "qsc/spec_file.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qsc {

namespace {

using nlohmann::json;

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Complex parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(std::string("malformed ") + what + ": complex scalars are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector parse_amplitudes(const json& j) {
  ComplexVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = parse_complex(j[i], "fiducial");
  return v;
}

ComplexMatrix parse_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ValidationError(std::string("malformed ") + what + ": expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ValidationError(std::string("malformed ") + what + ": empty row");
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ValidationError(std::string("malformed ") + what + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c], what);
  }
  return m;
}

bool looks_like_entry(const json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

FiducialSpec parse_fiducial(const json& j) {
  FiducialSpec f;
  if (!j.is_array() || j.empty())
    throw ValidationError("malformed fiducial: expected amplitudes or a density matrix");
  if (looks_like_entry(j[0])) {
    f.amplitudes = parse_amplitudes(j);
  } else {
    const ComplexMatrix m = parse_matrix(j, "fiducial");
    if (m.rows() != m.cols()) throw ValidationError("fiducial density matrix must be square");
    f.density = m;
  }
  return f;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok)
      throw ValidationError(std::string("unknown field '") + key + "' in " + where);
  }
}

void write_complex(std::ostringstream& out, const Complex& c) {
  out << '[' << fmt_full(c.real()) << ", " << fmt_full(c.imag()) << ']';
}

void write_amplitudes(std::ostringstream& out, const ComplexVector& v) {
  out << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    write_complex(out, v(i));
  }
  out << ']';
}

void write_matrix(std::ostringstream& out, const ComplexMatrix& m, const std::string& indent) {
  out << "[\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << indent << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ", ";
      write_complex(out, m(r, c));
    }
    out << ']' << (r + 1 < m.rows() ? ",\n" : "\n");
  }
  out << indent << ']';
}

void write_fiducial(std::ostringstream& out, const FiducialSpec& f, const std::string& indent) {
  if (f.amplitudes) {
    write_amplitudes(out, *f.amplitudes);
  } else {
    write_matrix(out, *f.density, indent);
  }
}

}  // namespace

DensityOperator FiducialSpec::realize() const {
  if (amplitudes) return DensityOperator::pure(StateVector(*amplitudes));
  if (density) return DensityOperator(*density);
  throw ValidationError("fiducial is empty");
}

bool FiducialSpec::operator==(const FiducialSpec& other) const {
  if (amplitudes.has_value() != other.amplitudes.has_value()) return false;
  if (density.has_value() != other.density.has_value()) return false;
  if (amplitudes && (*amplitudes - *other.amplitudes).cwiseAbs().maxCoeff() != 0.0) return false;
  if (density && max_abs(*density - *other.density) != 0.0) return false;
  return true;
}

bool CustomSpec::operator==(const CustomSpec& other) const {
  if (generators.size() != other.generators.size()) return false;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != other.generators[i].rows() ||
        generators[i].cols() != other.generators[i].cols())
      return false;
    if (max_abs(generators[i] - other.generators[i]) != 0.0) return false;
  }
  return fiducial == other.fiducial;
}

bool ProtocolSpec::operator==(const ProtocolSpec& other) const {
  return builtin == other.builtin && custom == other.custom && fiducial == other.fiducial &&
         copies == other.copies && seed == other.seed && restarts == other.restarts;
}

ProtocolSpec parse_protocol_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed protocol spec: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("protocol spec must be a JSON object");
  reject_unknown_keys(j, {"builtin", "custom", "fiducial", "copies", "seed", "restarts"},
                      "protocol spec");

  ProtocolSpec spec;
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw ValidationError("builtin must be a string");
    spec.builtin = j["builtin"].get<std::string>();
  }
  if (j.contains("custom")) {
    const json& c = j["custom"];
    if (!c.is_object()) throw ValidationError("custom must be an object");
    reject_unknown_keys(c, {"generators", "fiducial"}, "custom");
    if (!c.contains("generators") || !c["generators"].is_array() || c["generators"].empty())
      throw ValidationError("custom.generators must be a nonempty array of matrices");
    CustomSpec custom;
    for (const json& g : c["generators"]) custom.generators.push_back(parse_matrix(g, "generator"));
    if (!c.contains("fiducial")) throw ValidationError("custom.fiducial is required");
    custom.fiducial = parse_fiducial(c["fiducial"]);
    spec.custom = std::move(custom);
  }
  if (spec.builtin.has_value() == spec.custom.has_value())
    throw ValidationError("spec must contain exactly one of 'builtin' or 'custom'");

  if (j.contains("fiducial")) {
    if (spec.custom) throw ValidationError("top-level fiducial applies to builtins only");
    spec.fiducial = parse_fiducial(j["fiducial"]);
  }

  if (!j.contains("copies") || !j["copies"].is_number_integer())
    throw ValidationError("copies must be a positive count");
  spec.copies = j["copies"].get<int>();
  if (spec.copies < 1) throw ValidationError("copies must be a positive count");

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ValidationError("seed must be a nonnegative integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("restarts")) {
    if (!j["restarts"].is_number_integer() || j["restarts"].get<int>() < 1)
      throw ValidationError("restarts must be a positive count");
    spec.restarts = j["restarts"].get<int>();
  }
  return spec;
}

ProtocolSpec load_protocol_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read protocol spec: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read protocol spec: " + path);
  return parse_protocol_spec(buffer.str());
}

std::string canonical_spec_json(const ProtocolSpec& spec) {
  std::ostringstream out;
  out << "{\n";
  if (spec.builtin) {
    out << "  \"builtin\": \"" << *spec.builtin << "\"";
  } else {
    out << "  \"custom\": {\n    \"generators\": [\n";
    const std::vector<ComplexMatrix>& gens = spec.custom->generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out << "      ";
      write_matrix(out, gens[i], "      ");
      out << (i + 1 < gens.size() ? ",\n" : "\n");
    }
    out << "    ],\n    \"fiducial\": ";
    write_fiducial(out, spec.custom->fiducial, "    ");
    out << "\n  }";
  }
  if (spec.fiducial) {
    out << ",\n  \"fiducial\": ";
    write_fiducial(out, *spec.fiducial, "  ");
  }
  out << ",\n  \"copies\": " << spec.copies;
  if (spec.seed) out << ",\n  \"seed\": " << *spec.seed;
  if (spec.restarts) out << ",\n  \"restarts\": " << *spec.restarts;
  out << "\n}\n";
  return out.str();
}

QscProtocol realize_protocol(const ProtocolSpec& spec) {
  if (spec.builtin) {
    const BuiltinProtocol b = builtin_rep(*spec.builtin);
    std::vector<StateVector> label_states = b.label_states;
    DensityOperator fiducial = [&]() {
      if (spec.fiducial) {
        label_states.clear();  // an override invalidates the pinned labeling
        return spec.fiducial->realize();
      }
      if (b.fiducial) return DensityOperator::pure(*b.fiducial);
      throw ValidationError("builtin '" + *spec.builtin + "' requires an explicit fiducial");
    }();
    return build_protocol(b.rep, fiducial, spec.copies, label_states);
  }
  const ProjectiveRep rep = close_group(spec.custom->generators);
  return build_protocol(rep, spec.custom->fiducial.realize(), spec.copies);
}

}  // namespace qsc
