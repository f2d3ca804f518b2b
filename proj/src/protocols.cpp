#include "qdirac/protocols.hpp"

#include <cmath>
#include <string>

#include "qdirac/measurement.hpp"

namespace qdirac {

namespace {

void require_bits(int m1, int m2) {
    if ((m1 != 0 && m1 != 1) || (m2 != 0 && m2 != 1)) {
        throw Error(ErrorKind::OutOfRange, "classical bits must be 0 or 1");
    }
}

void require_qubits(const QuantumState& s, std::size_t n, const char* what) {
    if (s.n_qubits() != n) {
        throw Error(ErrorKind::WrongArity, std::string(what) + " expects " + std::to_string(n) +
                                               " qubit(s), got " + std::to_string(s.n_qubits()));
    }
}

}  // namespace

QuantumState alice_encode(const QuantumState& phi) {
    require_qubits(phi, 1, "alice_encode");
    QuantumState s = tensor_states(phi, bell(0, 0));
    s = apply(tensor_gates(cnot(), identity(1)), s);
    return apply(tensor_gates(hadamard(), identity(2)), s);
}

AliceBranch alice_out(const QuantumState& phi, int m1, int m2) {
    require_bits(m1, m2);
    const QuantumState encoded = alice_encode(phi);
    const double p1 = m1 == 1 ? prob1(encoded, 0) : prob0(encoded, 0);
    const QuantumState after_first = post_meas(encoded, 0, m1);
    const double p2 = m2 == 1 ? prob1(after_first, 1) : prob0(after_first, 1);
    return AliceBranch{p1 * p2, post_meas(after_first, 1, m2)};
}

Gate bob_correction(int m1, int m2) {
    require_bits(m1, m2);
    if (m1 == 0 && m2 == 0) return identity(1);
    if (m1 == 0) return pauli_x();
    if (m2 == 0) return pauli_z();
    // X first, then Z.
    return compose(pauli_z(), pauli_x());
}

QuantumState bob_decode(const QuantumState& post, int m1, int m2) {
    require_qubits(post, 3, "bob_decode");
    return apply(tensor_gates(identity(2), bob_correction(m1, m2)), post);
}

TeleportOutcome teleport_branch(const QuantumState& phi, int m1, int m2) {
    AliceBranch branch = alice_out(phi, m1, m2);
    QuantumState combined = bob_decode(branch.post, m1, m2);
    const std::size_t block = static_cast<std::size_t>(2 * m1 + m2) * 2;
    QuantumState bob = state_from_amplitudes({combined.amplitude(block), combined.amplitude(block + 1)});
    return TeleportOutcome{m1, m2, branch.probability, std::move(combined), std::move(bob)};
}

std::array<TeleportOutcome, 4> teleport(const QuantumState& phi) {
    return {teleport_branch(phi, 0, 0), teleport_branch(phi, 0, 1), teleport_branch(phi, 1, 0),
            teleport_branch(phi, 1, 1)};
}

QuantumMachine make_machine(std::size_t n, QuantumState ancilla, Gate unitary) {
    if (ancilla.n_qubits() != n) {
        throw Error(ErrorKind::WrongArity, "ancilla must have " + std::to_string(n) + " qubits, got " +
                                               std::to_string(ancilla.n_qubits()));
    }
    if (unitary.n_qubits() != 2 * n) {
        throw Error(ErrorKind::WrongArity, "machine unitary must act on " + std::to_string(2 * n) +
                                               " qubits, got " + std::to_string(unitary.n_qubits()));
    }
    return QuantumMachine{n, std::move(ancilla), std::move(unitary)};
}

double clone_residual(const QuantumMachine& m, const QuantumState& v) {
    require_qubits(v, m.n, "clone_residual");
    const ComplexMatrix out = m.unitary.matrix() * kronecker(v.vector(), m.ancilla.vector());
    return norm(out - kronecker(v.vector(), v.vector()));
}

bool is_cloner_for(const QuantumMachine& m, const QuantumState& v, Tolerance tol) {
    return clone_residual(m, v) < tol.eps();
}

double no_cloning_check(const QuantumMachine& m, const QuantumState& v, const QuantumState& w, Tolerance tol) {
    if (!is_cloner_for(m, v, tol)) {
        throw Error(ErrorKind::NotACloner, "machine does not clone the first state (residual " +
                                               std::to_string(clone_residual(m, v)) + ")");
    }
    if (!is_cloner_for(m, w, tol)) {
        throw Error(ErrorKind::NotACloner, "machine does not clone the second state (residual " +
                                               std::to_string(clone_residual(m, w)) + ")");
    }
    return std::abs(inner_prod(v.vector(), w.vector()));
}

QuantumMachine basis_cloner(std::size_t n) {
    if (n == 0 || n > 5) {
        throw Error(ErrorKind::WrongArity, "basis_cloner needs 1 <= n <= 5");
    }
    const std::size_t half = std::size_t{1} << n;
    const std::size_t dim = half * half;
    std::vector<Complex> e(dim * dim);
    for (std::size_t x = 0; x < half; ++x) {
        for (std::size_t y = 0; y < half; ++y) {
            const std::size_t from = x * half + y;
            const std::size_t to = x * half + (y ^ x);
            e[to * dim + from] = 1.0;
        }
    }
    return make_machine(n, ket(BasisLabel::from_index(n, 0)),
                        make_gate(2 * n, ComplexMatrix(dim, dim, std::move(e))));
}

}  // namespace qdirac
