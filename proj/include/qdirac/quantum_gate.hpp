#pragma once

#include <cstddef>
#include <string_view>

#include "qdirac/complex_linalg.hpp"
#include "qdirac/quantum_state.hpp"

namespace qdirac {

/// A 2^n x 2^n unitary. Instances exist only after make_gate has checked the
/// shape and unitarity, including gates derived from other gates.
class Gate {
public:
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

private:
    friend Gate make_gate(std::size_t n, ComplexMatrix m, Tolerance tol);
    Gate(std::size_t n, ComplexMatrix m) : n_qubits_(n), matrix_(std::move(m)) {}

    std::size_t n_qubits_;
    ComplexMatrix matrix_;
};

/// Errors: WrongDimension, NotUnitary (message carries the deviation).
Gate make_gate(std::size_t n, ComplexMatrix m, Tolerance tol = {});

Gate hadamard();
/// Control on the upper qubit: |xy> -> |x, x xor y>.
Gate cnot();
Gate pauli_x();
Gate pauli_y();
Gate pauli_z();
Gate phase_s();
Gate gate_t();
Gate identity(std::size_t n);

/// Lookup of the CLI tokens H, X, Y, Z, S, T, CNOT, ID1, ID2.
Gate gate_from_token(std::string_view token);

Gate tensor_gates(const Gate& a, const Gate& b);

/// k-fold tensor power; k >= 1.
Gate tensor_power(const Gate& g, std::size_t k);

/// Matrix a * b, so b acts first. Arity must match.
Gate compose(const Gate& a, const Gate& b);

/// g |s>. Arity must match; the result is revalidated as a state.
QuantumState apply(const Gate& g, const QuantumState& s);

}  // namespace qdirac
