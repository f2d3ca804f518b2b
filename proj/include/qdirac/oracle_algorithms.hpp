#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdirac/quantum_gate.hpp"
#include "qdirac/quantum_state.hpp"

namespace qdirac {

/// f : {0, ..., 2^n - 1} -> {0, 1} stored as its truth table in basis-label
/// order.
class BooleanFunction {
public:
    BooleanFunction(std::size_t n_inputs, std::vector<std::uint8_t> table);
    /// "0110" -> n = 2. Length must be a power of two >= 2.
    static BooleanFunction parse(std::string_view bits);

    std::size_t n_inputs() const noexcept { return n_inputs_; }
    std::size_t size() const noexcept { return table_.size(); }
    int operator()(std::size_t x) const { return table_.at(x); }
    const std::vector<std::uint8_t>& table() const noexcept { return table_; }
    std::string str() const;

private:
    std::size_t n_inputs_;
    std::vector<std::uint8_t> table_;
};

enum class Promise { Constant, Balanced };
enum class Classification { Constant, Balanced, Neither };

std::string_view to_string(Classification c) noexcept;

/// Full table scan; the classical reference.
Classification classify(const BooleanFunction& f);

/// The deterministic classical strategy under the promise: query f until two
/// different values appear or 2^(n-1) + 1 equal values have been seen.
struct ClassicalDecision {
    Promise verdict;
    std::size_t queries;
};
ClassicalDecision classical_decide_under_promise(const BooleanFunction& f);

/// U_f |x>|y> = |x>|y xor f(x)> as an (n+1)-qubit permutation matrix.
Gate oracle_gate(const BooleanFunction& f);

/// (H (x) Id) U_f (H (x) H) |01>. Needs a one-input function.
QuantumState deutsch_algo(const BooleanFunction& f);

/// First-qubit outcome of deutsch_algo, which is deterministic and equals
/// f(0) xor f(1).
int deutsch_eval(const BooleanFunction& f);

/// (H^n (x) Id) U_f H^(n+1) (|0...0> (x) |1>). PromiseViolated unless
/// classify(f) matches the promise.
QuantumState jozsa_algo(const BooleanFunction& f, Promise promise);

/// Probability that measuring the first n qubits of an (n+1)-qubit state
/// yields all zeros: |a(0..0,0)|^2 + |a(0..0,1)|^2.
double all_zero_probability(const QuantumState& s);

struct JozsaReport {
    int eval;  ///< 1 for constant, 0 for balanced
    double all_zero_probability;
    std::size_t oracle_queries;
    QuantumState final_state;
};

/// Outcome dichotomy margin: probabilities within this of 0 or 1 decide.
inline constexpr double kDichotomyMargin = 1e-6;

/// Errors: PromiseViolated; IndeterminateOutcome when the all-zero
/// probability falls strictly between margin and 1 - margin.
JozsaReport jozsa_run(const BooleanFunction& f, Promise promise, double margin = kDichotomyMargin);
int jozsa_eval(const BooleanFunction& f, Promise promise, double margin = kDichotomyMargin);

/// All 2^n-entry tables with exactly 2^(n-1) ones, in lexicographic order.
std::vector<BooleanFunction> balanced_functions(std::size_t n_inputs);
std::vector<BooleanFunction> constant_functions(std::size_t n_inputs);

}  // namespace qdirac
