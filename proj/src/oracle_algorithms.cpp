#include "qdirac/oracle_algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qdirac/measurement.hpp"

namespace qdirac {

namespace {

// H on qubit k of an n-qubit register, as Id_k (x) H (x) Id_(n-k-1).
Gate hadamard_on(std::size_t k, std::size_t n) {
    ComplexMatrix m = hadamard().matrix();
    if (k > 0) m = kronecker(ComplexMatrix::identity(std::size_t{1} << k), m);
    if (k + 1 < n) m = kronecker(m, ComplexMatrix::identity(std::size_t{1} << (n - k - 1)));
    return make_gate(n, std::move(m));
}

// Applies H to qubits [0, count) of s. The product of single-qubit layers
// equals H^(x)count (x) Id but each factor has two nonzeros per row, which
// keeps construction-time unitarity checks affordable for large registers.
QuantumState apply_hadamards(QuantumState s, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) s = apply(hadamard_on(k, s.n_qubits()), s);
    return s;
}

void require_one_input(const BooleanFunction& f) {
    if (f.n_inputs() != 1) {
        throw Error(ErrorKind::WrongArity,
                    "Deutsch's algorithm takes a one-input function, got n = " + std::to_string(f.n_inputs()));
    }
}

}  // namespace

BooleanFunction::BooleanFunction(std::size_t n_inputs, std::vector<std::uint8_t> table)
    : n_inputs_(n_inputs), table_(std::move(table)) {
    if (n_inputs_ == 0 || n_inputs_ > 20 || table_.size() != (std::size_t{1} << n_inputs_)) {
        throw Error(ErrorKind::InvalidTable, "a " + std::to_string(n_inputs_) + "-input table needs 2^" +
                                                 std::to_string(n_inputs_) + " entries, got " +
                                                 std::to_string(table_.size()));
    }
    if (std::any_of(table_.begin(), table_.end(), [](std::uint8_t b) { return b > 1; })) {
        throw Error(ErrorKind::InvalidTable, "table entries must be 0 or 1");
    }
}

BooleanFunction BooleanFunction::parse(std::string_view bits) {
    if (bits.size() < 2 || !std::has_single_bit(bits.size())) {
        throw Error(ErrorKind::InvalidTable,
                    "table '" + std::string(bits) + "' length is not a power of two >= 2");
    }
    std::vector<std::uint8_t> table;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::InvalidTable, "table '" + std::string(bits) + "' has a non-bit character");
        }
        table.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BooleanFunction(static_cast<std::size_t>(std::countr_zero(bits.size())), std::move(table));
}

std::string BooleanFunction::str() const {
    std::string out;
    for (auto b : table_) out.push_back(static_cast<char>('0' + b));
    return out;
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Constant: return "constant";
        case Classification::Balanced: return "balanced";
        case Classification::Neither: return "neither";
    }
    return "neither";
}

Classification classify(const BooleanFunction& f) {
    const auto ones = static_cast<std::size_t>(std::count(f.table().begin(), f.table().end(), 1));
    if (ones == 0 || ones == f.size()) return Classification::Constant;
    if (2 * ones == f.size()) return Classification::Balanced;
    return Classification::Neither;
}

ClassicalDecision classical_decide_under_promise(const BooleanFunction& f) {
    const std::size_t enough = f.size() / 2 + 1;
    const int first = f(0);
    std::size_t queries = 1;
    while (queries < enough) {
        const int value = f(queries);
        ++queries;
        if (value != first) return {Promise::Balanced, queries};
    }
    return {Promise::Constant, queries};
}

Gate oracle_gate(const BooleanFunction& f) {
    const std::size_t dim = f.size() * 2;
    std::vector<Complex> e(dim * dim);
    for (std::size_t x = 0; x < f.size(); ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            const std::size_t from = 2 * x + y;
            const std::size_t to = 2 * x + (y ^ static_cast<std::size_t>(f(x)));
            e[to * dim + from] = 1.0;
        }
    }
    return make_gate(f.n_inputs() + 1, ComplexMatrix(dim, dim, std::move(e)));
}

QuantumState deutsch_algo(const BooleanFunction& f) {
    require_one_input(f);
    const Gate h = hadamard();
    QuantumState s = apply(tensor_gates(h, h), ket("01"));
    s = apply(oracle_gate(f), s);
    return apply(tensor_gates(h, identity(1)), s);
}

int deutsch_eval(const BooleanFunction& f) {
    const QuantumState s = deutsch_algo(f);
    const double p1 = prob1(s, 0);
    if (p1 > 1.0 - kDichotomyMargin) return 1;
    if (p1 < kDichotomyMargin) return 0;
    throw Error(ErrorKind::IndeterminateOutcome, "first-qubit probability " + std::to_string(p1));
}

QuantumState jozsa_algo(const BooleanFunction& f, Promise promise) {
    const Classification c = classify(f);
    const bool kept = (promise == Promise::Constant && c == Classification::Constant) ||
                      (promise == Promise::Balanced && c == Classification::Balanced);
    if (!kept) {
        throw Error(ErrorKind::PromiseViolated, "table " + f.str() + " is " + std::string(to_string(c)));
    }
    const std::size_t n = f.n_inputs();
    const std::size_t input_index = 1;  // |0...0>|1>
    QuantumState s = make_state(n + 1, ComplexMatrix::basis_column(std::size_t{2} << n, input_index));
    s = apply_hadamards(std::move(s), n + 1);
    s = apply(oracle_gate(f), s);
    return apply_hadamards(std::move(s), n);
}

double all_zero_probability(const QuantumState& s) {
    return std::norm(s.amplitude(0)) + std::norm(s.amplitude(1));
}

JozsaReport jozsa_run(const BooleanFunction& f, Promise promise, double margin) {
    QuantumState s = jozsa_algo(f, promise);
    const double p = all_zero_probability(s);
    int eval = 0;
    if (p > 1.0 - margin) {
        eval = 1;
    } else if (p >= margin) {
        throw Error(ErrorKind::IndeterminateOutcome, "all-zero probability " + std::to_string(p));
    }
    return JozsaReport{eval, p, 1, std::move(s)};
}

int jozsa_eval(const BooleanFunction& f, Promise promise, double margin) {
    return jozsa_run(f, promise, margin).eval;
}

std::vector<BooleanFunction> balanced_functions(std::size_t n_inputs) {
    const std::size_t size = std::size_t{1} << n_inputs;
    std::vector<std::uint8_t> table(size, 0);
    std::fill(table.begin() + static_cast<std::ptrdiff_t>(size / 2), table.end(), 1);
    std::vector<BooleanFunction> out;
    do {
        out.emplace_back(n_inputs, table);
    } while (std::next_permutation(table.begin(), table.end()));
    return out;
}

std::vector<BooleanFunction> constant_functions(std::size_t n_inputs) {
    const std::size_t size = std::size_t{1} << n_inputs;
    return {BooleanFunction(n_inputs, std::vector<std::uint8_t>(size, 0)),
            BooleanFunction(n_inputs, std::vector<std::uint8_t>(size, 1))};
}

}  // namespace qdirac
