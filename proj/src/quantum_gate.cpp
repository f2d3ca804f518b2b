#include "qdirac/quantum_gate.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdirac {

Gate make_gate(std::size_t n, ComplexMatrix m, Tolerance tol) {
    if (n == 0 || n >= 32 || !m.is_square() || m.rows() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::WrongDimension, "a " + std::to_string(n) + "-qubit gate needs a 2^" +
                                                   std::to_string(n) + " square matrix, got " + m.shape_string());
    }
    const double dev = unitarity_deviation(m);
    if (!(dev < tol.eps())) {
        throw Error(ErrorKind::NotUnitary, "max deviation from identity is " + std::to_string(dev));
    }
    return Gate(n, std::move(m));
}

Gate hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return make_gate(1, {{h, h}, {h, -h}});
}

Gate cnot() {
    return make_gate(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

Gate pauli_x() { return make_gate(1, {{0, 1}, {1, 0}}); }

Gate pauli_y() {
    const Complex i{0.0, 1.0};
    return make_gate(1, {{0, -i}, {i, 0}});
}

Gate pauli_z() { return make_gate(1, {{1, 0}, {0, -1}}); }

Gate phase_s() { return make_gate(1, {{1, 0}, {0, Complex{0.0, 1.0}}}); }

Gate gate_t() {
    return make_gate(1, {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}});
}

Gate identity(std::size_t n) {
    if (n == 0 || n >= 32) {
        throw Error(ErrorKind::WrongDimension, "identity needs 1 <= n < 32");
    }
    return make_gate(n, ComplexMatrix::identity(std::size_t{1} << n));
}

Gate gate_from_token(std::string_view token) {
    if (token == "H") return hadamard();
    if (token == "X") return pauli_x();
    if (token == "Y") return pauli_y();
    if (token == "Z") return pauli_z();
    if (token == "S") return phase_s();
    if (token == "T") return gate_t();
    if (token == "CNOT") return cnot();
    if (token == "ID1") return identity(1);
    if (token == "ID2") return identity(2);
    throw Error(ErrorKind::UnknownName, "no gate named '" + std::string(token) + "'");
}

Gate tensor_gates(const Gate& a, const Gate& b) {
    return make_gate(a.n_qubits() + b.n_qubits(), kronecker(a.matrix(), b.matrix()));
}

Gate tensor_power(const Gate& g, std::size_t k) {
    if (k == 0) {
        throw Error(ErrorKind::WrongArity, "tensor power needs k >= 1");
    }
    Gate out = g;
    for (std::size_t i = 1; i < k; ++i) out = tensor_gates(out, g);
    return out;
}

Gate compose(const Gate& a, const Gate& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorKind::WrongArity, "cannot compose " + std::to_string(a.n_qubits()) + "-qubit and " +
                                               std::to_string(b.n_qubits()) + "-qubit gates");
    }
    return make_gate(a.n_qubits(), a.matrix() * b.matrix());
}

QuantumState apply(const Gate& g, const QuantumState& s) {
    if (g.n_qubits() != s.n_qubits()) {
        throw Error(ErrorKind::WrongArity, "cannot apply a " + std::to_string(g.n_qubits()) + "-qubit gate to a " +
                                               std::to_string(s.n_qubits()) + "-qubit state");
    }
    return make_state(s.n_qubits(), g.matrix() * s.vector());
}

}  // namespace qdirac
