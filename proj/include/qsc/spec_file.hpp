#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qsc/protocol.hpp"

namespace qsc {

// Fiducial state as written in a protocol definition: either an amplitude
// list (pure state) or a density matrix.
struct FiducialSpec {
  std::optional<ComplexVector> amplitudes;
  std::optional<ComplexMatrix> density;

  DensityOperator realize() const;
  bool operator==(const FiducialSpec& other) const;
};

struct CustomSpec {
  std::vector<ComplexMatrix> generators;
  FiducialSpec fiducial;

  bool operator==(const CustomSpec& other) const;
};

// Parsed protocol definition file. Exactly one of builtin/custom is present.
struct ProtocolSpec {
  std::optional<std::string> builtin;
  std::optional<CustomSpec> custom;
  std::optional<FiducialSpec> fiducial;  // optional override for builtins
  int copies = 1;
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;

  bool operator==(const ProtocolSpec& other) const;
};

ProtocolSpec parse_protocol_spec(const std::string& json_text);
ProtocolSpec load_protocol_spec(const std::string& path);

// Canonical serialization: fixed key order, full-precision reals, complex
// scalars as [re, im]. Re-parses to an identical in-memory spec.
std::string canonical_spec_json(const ProtocolSpec& spec);

// Resolves builtins, closes custom generators, and builds the protocol.
QscProtocol realize_protocol(const ProtocolSpec& spec);

}  // namespace qsc
