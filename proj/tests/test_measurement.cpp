#include <gtest/gtest.h>

#include <bitset>
#include <cmath>
#include <numbers>

#include "qdirac/measurement.hpp"
#include "qdirac/quantum_gate.hpp"
#include "test_support.hpp"

using namespace qdirac;
using qdirac::ref::Rng;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;

ErrorKind error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ParseError;
}

// Enumerates basis labels as strings and reads digit i directly.
double enumerated_prob1(const std::vector<Complex>& amps, std::size_t n, std::size_t i) {
    double p = 0.0;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const std::string label = std::bitset<8>(j).to_string().substr(8 - n);
        if (label[i] == '1') p += std::norm(amps[j]);
    }
    return p;
}

}  // namespace

TEST(SelectIndex, Examples) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(select_index(2, 0, j), j == 2 || j == 3) << j;
    EXPECT_TRUE(select_index(1, 0, 1));
    EXPECT_FALSE(select_index(1, 0, 0));
    EXPECT_FALSE(select_index(2, 2, 0));
    EXPECT_FALSE(select_index(2, 0, 4));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(select_index(2, 1, j), j == 1 || j == 3) << j;
}

TEST(Prob, Examples) {
    EXPECT_NEAR(prob1(bell(0, 0), 0), 0.5, 1e-12);
    EXPECT_NEAR(prob0(bell(0, 0), 1), 0.5, 1e-12);
    EXPECT_EQ(prob1(ket("0"), 0), 0.0);
    EXPECT_EQ(prob0(ket("1"), 0), 0.0);
    Rng rng(40);
    const auto s = rng.state(2);
    EXPECT_NEAR(prob1(s, 0), std::norm(s.amplitude(2)) + std::norm(s.amplitude(3)), 1e-15);
    EXPECT_NEAR(prob0(s, 0), std::norm(s.amplitude(0)) + std::norm(s.amplitude(1)), 1e-15);
    EXPECT_EQ(error_of([] { prob1(ket("01"), 2); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(error_of([] { prob0(ket("01"), 5); }), ErrorKind::IndexOutOfRange);
}

TEST(Prob, AgreesWithEnumerationOnRationalAmplitudes) {
    // Amplitudes k/den with small integers, normalized by an exact rational norm.
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.index(3);
        const std::size_t dim = std::size_t{1} << n;
        std::vector<Complex> amps(dim);
        double total = 0.0;
        for (auto& a : amps) {
            a = Complex(static_cast<double>(rng.index(7)) - 3.0, static_cast<double>(rng.index(7)) - 3.0);
            total += std::norm(a);
        }
        if (total == 0.0) continue;
        for (auto& a : amps) a /= std::sqrt(total);
        const auto s = state_from_amplitudes(amps);
        for (std::size_t i = 0; i < n; ++i) {
            const double expected = enumerated_prob1(amps, n, i);
            EXPECT_NEAR(prob1(s, i), expected, 1e-12);
            EXPECT_NEAR(prob0(s, i), 1.0 - expected, 1e-12);
        }
    }
}

TEST(PostMeasurement, Examples) {
    EXPECT_LT(max_abs_diff(post_meas0(bell(0, 0), 0).vector(), ket("00").vector()), 1e-12);
    EXPECT_NEAR(prob0(post_meas0(bell(0, 0), 0), 1), 1.0, 1e-12);
    Rng rng(42);
    const auto psi = rng.state(1);
    const auto s = tensor_states(ket("0"), psi);
    EXPECT_LT(max_abs_diff(post_meas0(s, 0).vector(), s.vector()), 1e-12);
    EXPECT_LT(max_abs_diff(post_meas1(bell(0, 1), 0).vector(), ket("10").vector()), 1e-12);
    EXPECT_LT(max_abs_diff(post_meas1(ket("1"), 0).vector(), ket("1").vector()), 1e-15);
    EXPECT_EQ(error_of([] { post_meas1(ket("0"), 0); }), ErrorKind::ZeroProbabilityBranch);
    EXPECT_EQ(error_of([] { post_meas0(ket("1"), 0); }), ErrorKind::ZeroProbabilityBranch);
    EXPECT_EQ(error_of([] { post_meas0(ket("1"), 1); }), ErrorKind::IndexOutOfRange);
}

TEST(PostMeasurement, TwoQubitClosedForm) {
    Rng rng(43);
    for (int k = 0; k < 100; ++k) {
        const auto s = rng.state(2);
        const Complex a00 = s.amplitude(0), a01 = s.amplitude(1);
        const double len = std::sqrt(std::norm(a00) + std::norm(a01));
        const auto expected = tensor_states(ket("0"), state_from_amplitudes({a00 / len, a01 / len}));
        EXPECT_LT(max_abs_diff(post_meas0(s, 0).vector(), expected.vector()), 1e-12);
    }
}

TEST(PostMeasurement, CompletenessPurityIdempotenceReconstruction) {
    Rng rng(44);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 1 + rng.index(3);
        const auto s = rng.state(n);
        const std::size_t i = rng.index(n);
        const double p0 = prob0(s, i), p1 = prob1(s, i);
        EXPECT_NEAR(p0 + p1, 1.0, 1e-9);
        const auto s0 = post_meas0(s, i);
        const auto s1 = post_meas1(s, i);
        EXPECT_NEAR(norm(s0.vector()), 1.0, 1e-9);
        EXPECT_NEAR(norm(s1.vector()), 1.0, 1e-9);
        EXPECT_LT(prob1(s0, i), 1e-9);
        EXPECT_LT(prob0(s1, i), 1e-9);
        EXPECT_LT(max_abs_diff(post_meas0(s0, i).vector(), s0.vector()), 1e-9);
        EXPECT_LT(max_abs_diff(post_meas1(s1, i).vector(), s1.vector()), 1e-9);
        const auto rebuilt = Complex{std::sqrt(p0)} * s0.vector() + Complex{std::sqrt(p1)} * s1.vector();
        EXPECT_LT(max_abs_diff(rebuilt, s.vector()), 1e-9);
    }
}

TEST(BellCorrelations, SameOrOppositeOutcomes) {
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int first = 0; first < 2; ++first) {
                const auto post = post_meas(bell(a, b), 0, first);
                const int expected = b == 0 ? first : 1 - first;
                const double p = expected == 1 ? prob1(post, 1) : prob0(post, 1);
                EXPECT_NEAR(p, 1.0, 1e-12) << "beta_" << a << b << " first=" << first;
            }
        }
    }
}

TEST(Measure, DeterministicCases) {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
        const auto m = measure(ket("0"), 0, seed);
        EXPECT_EQ(m.bit, 0);
        EXPECT_EQ(m.probability, 1.0);
        ASSERT_TRUE(m.post_state.has_value());
        EXPECT_EQ(m.post_state->vector(), ket("0").vector());
    }
    EXPECT_EQ(error_of([] { measure(ket("0"), 1, 0); }), ErrorKind::IndexOutOfRange);
}

TEST(Measure, SameSeedSameOutcome) {
    const auto plus = state_from_amplitudes({kH, kH});
    for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(measure(plus, 0, seed).bit, measure(plus, 0, seed).bit);
}

TEST(Measure, FrequencyMatchesProbability) {
    const auto counts = sample_counts(bell(0, 0), 0, 100000, 7);
    EXPECT_EQ(counts.zeros + counts.ones, 100000u);
    EXPECT_NEAR(static_cast<double>(counts.ones) / 100000.0, 0.5, 0.01);

    std::size_t ones = 0;
    for (std::uint64_t seed = 0; seed < 20000; ++seed) ones += static_cast<std::size_t>(measure(bell(0, 0), 0, seed).bit);
    EXPECT_NEAR(static_cast<double>(ones) / 20000.0, 0.5, 0.02);
}

TEST(Measure, BellOutcomesCorrelated) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto first = measure(bell(0, 0), 0, seed);
        ASSERT_TRUE(first.post_state.has_value());
        EXPECT_NEAR(first.probability, 0.5, 1e-12);
        const auto second = measure(*first.post_state, 1, seed * 7919 + 1);
        EXPECT_EQ(first.bit, second.bit);
        EXPECT_NEAR(second.probability, 1.0, 1e-12);
    }
}
