#include "qdirac/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qdirac {

namespace {

void require_index(const QuantumState& s, std::size_t i) {
    if (i >= s.n_qubits()) {
        throw Error(ErrorKind::IndexOutOfRange, "qubit " + std::to_string(i) + " does not exist in a " +
                                                    std::to_string(s.n_qubits()) + "-qubit state");
    }
}

// Uniform draw in [0, 1) from the top 53 bits, independent of the standard
// library's distribution implementation.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int draw_bit(std::mt19937_64& rng, double p1) { return unit_draw(rng) < p1 ? 1 : 0; }

}  // namespace

bool select_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
    if (i >= n || n >= 64 || j >= (std::size_t{1} << n)) return false;
    return ((j >> (n - 1 - i)) & 1U) == 1U;
}

double prob1(const QuantumState& s, std::size_t i) {
    require_index(s, i);
    double p = 0.0;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (select_index(s.n_qubits(), i, j)) p += std::norm(s.amplitude(j));
    }
    return std::clamp(p, 0.0, 1.0);
}

double prob0(const QuantumState& s, std::size_t i) {
    require_index(s, i);
    double p = 0.0;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (!select_index(s.n_qubits(), i, j)) p += std::norm(s.amplitude(j));
    }
    return std::clamp(p, 0.0, 1.0);
}

QuantumState post_meas(const QuantumState& s, std::size_t i, int bit, Tolerance tol) {
    require_index(s, i);
    if (bit != 0 && bit != 1) {
        throw Error(ErrorKind::OutOfRange, "measurement outcome must be 0 or 1");
    }
    const double p = bit == 1 ? prob1(s, i) : prob0(s, i);
    if (!(p > tol.eps())) {
        throw Error(ErrorKind::ZeroProbabilityBranch, "outcome " + std::to_string(bit) + " on qubit " +
                                                          std::to_string(i) + " has probability " +
                                                          std::to_string(p));
    }
    const double scale = 1.0 / std::sqrt(p);
    std::vector<Complex> amps(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (select_index(s.n_qubits(), i, j) == (bit == 1)) amps[j] = s.amplitude(j) * scale;
    }
    return make_state(s.n_qubits(), ComplexMatrix::column(std::move(amps)));
}

QuantumState post_meas0(const QuantumState& s, std::size_t i, Tolerance tol) { return post_meas(s, i, 0, tol); }

QuantumState post_meas1(const QuantumState& s, std::size_t i, Tolerance tol) { return post_meas(s, i, 1, tol); }

MeasurementOutcome measure(const QuantumState& s, std::size_t i, std::uint64_t rng_seed) {
    const double p1 = prob1(s, i);
    std::mt19937_64 rng(rng_seed);
    const int bit = draw_bit(rng, p1);
    const double p = bit == 1 ? p1 : 1.0 - p1;
    MeasurementOutcome out{i, bit, p, std::nullopt};
    if (p > Tolerance::kDefaultEps) out.post_state = post_meas(s, i, bit);
    return out;
}

ShotCounts sample_counts(const QuantumState& s, std::size_t i, std::size_t shots, std::uint64_t rng_seed) {
    const double p1 = prob1(s, i);
    std::mt19937_64 rng(rng_seed);
    ShotCounts counts;
    for (std::size_t k = 0; k < shots; ++k) {
        if (draw_bit(rng, p1) == 1) {
            ++counts.ones;
        } else {
            ++counts.zeros;
        }
    }
    return counts;
}

}  // namespace qdirac
