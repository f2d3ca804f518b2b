#include "qdirac/quantum_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace qdirac {

namespace {

void require_two_qubits(const QuantumState& s, const char* what) {
    if (s.n_qubits() != 2) {
        throw Error(ErrorKind::WrongArity,
                    std::string(what) + " is defined for 2 qubits, got " + std::to_string(s.n_qubits()));
    }
}

QuantumState normalized_single_qubit(Complex a0, Complex a1) {
    const double len = std::sqrt(std::norm(a0) + std::norm(a1));
    return state_from_amplitudes({a0 / len, a1 / len});
}

}  // namespace

BasisLabel::BasisLabel(std::vector<int> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw Error(ErrorKind::WrongDimension, "basis label needs at least one qubit");
    }
    for (int b : bits_) {
        if (b != 0 && b != 1) {
            throw Error(ErrorKind::ParseError, "basis label digits must be 0 or 1");
        }
    }
}

BasisLabel BasisLabel::parse(std::string_view bits) {
    std::vector<int> digits;
    digits.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::ParseError, "invalid basis label '" + std::string(bits) + "'");
        }
        digits.push_back(c - '0');
    }
    return BasisLabel(std::move(digits));
}

BasisLabel BasisLabel::from_index(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits >= 64 || index >= (std::size_t{1} << n_qubits)) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(index) + " is not a " + std::to_string(n_qubits) + "-qubit label");
    }
    std::vector<int> digits(n_qubits);
    for (std::size_t k = 0; k < n_qubits; ++k) {
        digits[k] = static_cast<int>((index >> (n_qubits - 1 - k)) & 1U);
    }
    return BasisLabel(std::move(digits));
}

std::size_t BasisLabel::index() const noexcept {
    std::size_t idx = 0;
    for (int b : bits_) idx = (idx << 1) | static_cast<std::size_t>(b);
    return idx;
}

std::string BasisLabel::str() const {
    std::string out;
    for (int b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

QuantumState make_state(std::size_t n, ComplexMatrix v, Tolerance tol) {
    if (!v.is_column()) {
        throw Error(ErrorKind::NotColumn, "state vector must be a column, got " + v.shape_string());
    }
    if (n == 0 || n >= 64 || v.rows() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::WrongDimension, "a " + std::to_string(n) + "-qubit state needs 2^" +
                                                   std::to_string(n) + " rows, got " + v.shape_string());
    }
    const double len = norm(v);
    if (!(std::abs(len - 1.0) < tol.eps())) {
        throw Error(ErrorKind::NotNormalized, "state norm is " + std::to_string(len));
    }
    return QuantumState(n, std::move(v));
}

QuantumState state_from_amplitudes(std::vector<Complex> amplitudes, Tolerance tol) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::WrongDimension,
                    "amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    return make_state(n, ComplexMatrix::column(std::move(amplitudes)), tol);
}

QuantumState ket(const BasisLabel& label) {
    const std::size_t dim = std::size_t{1} << label.n_qubits();
    return make_state(label.n_qubits(), ComplexMatrix::basis_column(dim, label.index()));
}

QuantumState ket(std::string_view bits) { return ket(BasisLabel::parse(bits)); }

ComplexMatrix bra(const QuantumState& s) {
    std::vector<Complex> row;
    row.reserve(s.dim());
    for (const auto& a : s.vector().entries()) row.push_back(std::conj(a));
    return ComplexMatrix(1, s.dim(), std::move(row));
}

QuantumState tensor_states(const QuantumState& a, const QuantumState& b) {
    return make_state(a.n_qubits() + b.n_qubits(), kronecker(a.vector(), b.vector()));
}

QuantumState bell(int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
        throw Error(ErrorKind::OutOfRange, "Bell state indices must be bits");
    }
    const double h = 1.0 / std::numbers::sqrt2;
    const double sign = a == 0 ? 1.0 : -1.0;
    std::vector<Complex> amps(4);
    if (b == 0) {
        amps[0] = h;
        amps[3] = sign * h;
    } else {
        amps[1] = h;
        amps[2] = sign * h;
    }
    return state_from_amplitudes(std::move(amps));
}

bool is_product_state_2q(const QuantumState& s, Tolerance tol) {
    require_two_qubits(s, "is_product_state_2q");
    const Complex det = s.amplitude(0) * s.amplitude(3) - s.amplitude(1) * s.amplitude(2);
    return std::abs(det) < tol.eps();
}

bool is_entangled_2q(const QuantumState& s, Tolerance tol) { return !is_product_state_2q(s, tol); }

std::pair<QuantumState, QuantumState> factor_product_state_2q(const QuantumState& s, Tolerance tol) {
    if (!is_product_state_2q(s, tol)) {
        throw Error(ErrorKind::NotProductState, "state has Schmidt rank 2");
    }
    // Amplitude (i, j) of the 2x2 coefficient matrix is entry 2i + j.
    std::size_t best = 0;
    for (std::size_t k = 1; k < 4; ++k) {
        if (std::abs(s.amplitude(k)) > std::abs(s.amplitude(best))) best = k;
    }
    const std::size_t row = best / 2;
    const std::size_t col = best % 2;
    auto first = normalized_single_qubit(s.amplitude(col), s.amplitude(2 + col));
    auto second = normalized_single_qubit(s.amplitude(2 * row), s.amplitude(2 * row + 1));
    return {std::move(first), std::move(second)};
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    return std::norm(inner_prod(a.vector(), b.vector()));
}

bool states_equal_up_to_phase(const QuantumState& a, const QuantumState& b, Tolerance tol) {
    if (a.n_qubits() != b.n_qubits()) return false;
    const Complex overlap = inner_prod(b.vector(), a.vector());
    const double mag = std::abs(overlap);
    if (mag < 0.5) return false;
    const Complex phase = overlap / mag;
    return max_abs_diff(a.vector(), phase * b.vector()) < tol.eps();
}

}  // namespace qdirac
