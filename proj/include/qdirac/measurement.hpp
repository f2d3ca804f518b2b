#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qdirac/quantum_state.hpp"

namespace qdirac {

/// Result of one computational-basis measurement of a single qubit.
/// post_state is empty only when the observed branch had probability < eps,
/// which sampling never produces.
struct MeasurementOutcome {
    std::size_t qubit_index;
    int bit;
    double probability;
    std::optional<QuantumState> post_state;
};

/// True iff i < n, j < 2^n, and digit i (most significant first) of the
/// n-bit expansion of j is 1. Total: out-of-range arguments give false.
bool select_index(std::size_t n, std::size_t i, std::size_t j) noexcept;

/// Sum of |a_j|^2 over j with digit i set.
double prob1(const QuantumState& s, std::size_t i);
double prob0(const QuantumState& s, std::size_t i);

/// Projects onto digit i = 0 (resp. 1) and renormalizes.
/// Errors: IndexOutOfRange, ZeroProbabilityBranch when the branch has
/// probability <= eps.
QuantumState post_meas0(const QuantumState& s, std::size_t i, Tolerance tol = {});
QuantumState post_meas1(const QuantumState& s, std::size_t i, Tolerance tol = {});
QuantumState post_meas(const QuantumState& s, std::size_t i, int bit, Tolerance tol = {});

/// Draws the outcome with a std::mt19937_64 seeded from rng_seed. The same
/// (state, qubit, seed) always gives the same outcome.
MeasurementOutcome measure(const QuantumState& s, std::size_t i, std::uint64_t rng_seed);

struct ShotCounts {
    std::size_t zeros = 0;
    std::size_t ones = 0;
};

/// Repeated independent measurements of qubit i on fresh copies of s, all
/// drawn from one generator seeded with rng_seed.
ShotCounts sample_counts(const QuantumState& s, std::size_t i, std::size_t shots, std::uint64_t rng_seed);

}  // namespace qdirac
