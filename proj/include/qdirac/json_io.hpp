#pragma once

#include <filesystem>

#include "json.hpp"
#include "qdirac/complex_linalg.hpp"
#include "qdirac/protocols.hpp"
#include "qdirac/quantum_gate.hpp"
#include "qdirac/quantum_state.hpp"

// Interchange formats used by the CLI and test fixtures.
//
//   matrix:  {"rows": r, "cols": c, "entries": [[re, im], ...]}   row-major
//   state:   {"n_qubits": n, "amplitudes": [[re, im], ...]}       basis order
//   gate:    matrix object plus "n_qubits"
//   machine: {"n": n, "ancilla": <state>, "unitary": <gate>}
//
// Malformed documents raise qdirac::Error with kind ParseError; well-formed
// documents that violate a domain invariant raise the domain error.
namespace qdirac {

using Json = nlohmann::json;

Json to_json(const ComplexMatrix& m);
Json to_json(const QuantumState& s);
Json to_json(const Gate& g);
Json to_json(const QuantumMachine& m);

ComplexMatrix matrix_from_json(const Json& j);
/// Also accepts a document that wraps the state under a "state" key, which is
/// how the CLI emits states.
QuantumState state_from_json(const Json& j, Tolerance tol = {});
Gate gate_from_json(const Json& j, Tolerance tol = {});
QuantumMachine machine_from_json(const Json& j, Tolerance tol = {});

Json read_json_file(const std::filesystem::path& path);

}  // namespace qdirac
