#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdirac/complex_linalg.hpp"

namespace qdirac {

/// Computational-basis label. Qubit 0 is the leftmost (most significant)
/// digit, so |xy> sits at index 2x + y.
class BasisLabel {
public:
    /// Digits most significant first; each must be 0 or 1.
    explicit BasisLabel(std::vector<int> bits);
    /// Parses "011" style strings.
    static BasisLabel parse(std::string_view bits);
    static BasisLabel from_index(std::size_t n_qubits, std::size_t index);

    std::size_t n_qubits() const noexcept { return bits_.size(); }
    const std::vector<int>& bits() const noexcept { return bits_; }
    std::size_t index() const noexcept;
    std::string str() const;

private:
    std::vector<int> bits_;
};

/// Normalized column of dimension 2^n. Only obtainable through make_state and
/// the named constructors below, so every instance satisfies both invariants.
class QuantumState {
public:
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return vector_.rows(); }
    const ComplexMatrix& vector() const noexcept { return vector_; }
    const Complex& amplitude(std::size_t index) const { return vector_(index, 0); }

private:
    friend QuantumState make_state(std::size_t n, ComplexMatrix v, Tolerance tol);
    QuantumState(std::size_t n, ComplexMatrix v) : n_qubits_(n), vector_(std::move(v)) {}

    std::size_t n_qubits_;
    ComplexMatrix vector_;
};

/// Validates shape and normalization. Errors: NotColumn, WrongDimension,
/// NotNormalized (includes the zero vector).
QuantumState make_state(std::size_t n, ComplexMatrix v, Tolerance tol = {});

/// Infers n from the length of the amplitude list.
QuantumState state_from_amplitudes(std::vector<Complex> amplitudes, Tolerance tol = {});

QuantumState ket(const BasisLabel& label);
QuantumState ket(std::string_view bits);

/// 1 x 2^n row of conjugated amplitudes.
ComplexMatrix bra(const QuantumState& s);

QuantumState tensor_states(const QuantumState& a, const QuantumState& b);

/// beta_ab: b00 = (|00>+|11>)/sqrt2, b01 = (|01>+|10>)/sqrt2,
/// b10 = (|00>-|11>)/sqrt2, b11 = (|01>-|10>)/sqrt2.
QuantumState bell(int a, int b);

/// Determinant (Schmidt rank) test: |a00 a11 - a01 a10| < eps.
/// WrongArity unless the state has exactly two qubits.
bool is_product_state_2q(const QuantumState& s, Tolerance tol = {});
bool is_entangled_2q(const QuantumState& s, Tolerance tol = {});

/// Recovers single-qubit factors (u, w) with u (x) w equal to s up to a global
/// phase. Picks the row/column through the largest amplitude, so it is stable
/// for any product state. Errors: WrongArity, or NotProductState if s is
/// entangled beyond tolerance.
std::pair<QuantumState, QuantumState> factor_product_state_2q(const QuantumState& s, Tolerance tol = {});

/// |<a|b>|^2.
double fidelity(const QuantumState& a, const QuantumState& b);

/// True iff a = c * b for some |c| = 1, within eps entrywise.
bool states_equal_up_to_phase(const QuantumState& a, const QuantumState& b, Tolerance tol = {});

}  // namespace qdirac
