#pragma once

#include <array>
#include <cstddef>

#include "qdirac/quantum_gate.hpp"
#include "qdirac/quantum_state.hpp"

namespace qdirac {

// ---------------------------------------------------------------------------
// Teleportation
// ---------------------------------------------------------------------------

/// (H (x) Id_2) (CNOT (x) Id_1) (phi (x) b00). Qubit 0 is phi, qubit 1 is
/// Alice's half of the EPR pair, qubit 2 is Bob's.
QuantumState alice_encode(const QuantumState& phi);

struct AliceBranch {
    double probability;  ///< joint probability of (m1, m2)
    QuantumState post;   ///< 3-qubit state after both measurements
};

/// Measures qubit 0 (outcome m1) then qubit 1 (outcome m2) of alice_encode(phi).
AliceBranch alice_out(const QuantumState& phi, int m1, int m2);

/// Bob's correction Id_2 (x) G with G = I, X, Z, Z*X for (m1, m2) = 00, 01, 10, 11.
QuantumState bob_decode(const QuantumState& post, int m1, int m2);

/// The single-qubit correction Bob applies for (m1, m2).
Gate bob_correction(int m1, int m2);

struct TeleportOutcome {
    int m1;
    int m2;
    double probability;
    QuantumState combined_state;  ///< |m1 m2> (x) bob_state
    QuantumState bob_state;
};

/// Runs one branch. bob_state is read off the |m1 m2> block of the decoded
/// state, which must already have unit norm; a combined state that does not
/// factor is rejected with NotNormalized.
TeleportOutcome teleport_branch(const QuantumState& phi, int m1, int m2);

/// All four branches in order 00, 01, 10, 11.
std::array<TeleportOutcome, 4> teleport(const QuantumState& phi);

// ---------------------------------------------------------------------------
// No-cloning
// ---------------------------------------------------------------------------

/// Ancilla s on n qubits and a 2n-qubit unitary U; the machine maps v (x) s.
struct QuantumMachine {
    std::size_t n;
    QuantumState ancilla;
    Gate unitary;
};

/// Errors: WrongArity when the ancilla or the unitary do not match n.
QuantumMachine make_machine(std::size_t n, QuantumState ancilla, Gate unitary);

/// |U (v (x) s) - v (x) v|.
double clone_residual(const QuantumMachine& m, const QuantumState& v);

bool is_cloner_for(const QuantumMachine& m, const QuantumState& v, Tolerance tol = {});

/// Returns |<v|w>| for a machine that clones both states. By the theorem this
/// is 0 or 1 within tolerance. NotACloner names the state that fails.
double no_cloning_check(const QuantumMachine& m, const QuantumState& v, const QuantumState& w, Tolerance tol = {});

/// Ancilla |0...0>, unitary |x>|y> -> |x>|y xor x> (bitwise). Copies every
/// basis ket and nothing else.
QuantumMachine basis_cloner(std::size_t n);

}  // namespace qdirac
