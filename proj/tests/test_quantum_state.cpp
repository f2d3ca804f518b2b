#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qdirac/quantum_gate.hpp"
#include "qdirac/quantum_state.hpp"
#include "test_support.hpp"

using namespace qdirac;
using qdirac::ref::Rng;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;
const Complex I{0.0, 1.0};

ErrorKind error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ParseError;
}

void expect_amplitudes(const QuantumState& s, std::vector<Complex> expected, double tol = 1e-12) {
    ASSERT_EQ(s.dim(), expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) {
        EXPECT_NEAR(std::abs(s.amplitude(j) - expected[j]), 0.0, tol) << "j = " << j;
    }
}

}  // namespace

TEST(MakeState, Examples) {
    expect_amplitudes(make_state(1, ComplexMatrix::column({1.0, 0.0})), {1.0, 0.0});
    EXPECT_EQ(error_of([] { make_state(1, ComplexMatrix::column({0.0, 0.0})); }), ErrorKind::NotNormalized);
    const auto b = make_state(2, ComplexMatrix::column({kH, 0.0, 0.0, kH}));
    EXPECT_LT(max_abs_diff(b.vector(), bell(0, 0).vector()), 1e-12);
}

TEST(MakeState, ShapeErrors) {
    EXPECT_EQ(error_of([] { make_state(1, ComplexMatrix::identity(2)); }), ErrorKind::NotColumn);
    EXPECT_EQ(error_of([] { make_state(2, ComplexMatrix::column({1.0, 0.0})); }), ErrorKind::WrongDimension);
    EXPECT_EQ(error_of([] { make_state(0, ComplexMatrix::column({1.0})); }), ErrorKind::WrongDimension);
    EXPECT_EQ(error_of([] { state_from_amplitudes({1.0, 0.0, 0.0}); }), ErrorKind::WrongDimension);
}

TEST(MakeState, ToleranceIsRespected) {
    const auto v = ComplexMatrix::column({1.0 + 1e-6, 0.0});
    EXPECT_EQ(error_of([&] { make_state(1, v); }), ErrorKind::NotNormalized);
    EXPECT_NO_THROW(make_state(1, v, Tolerance(1e-5)));
}

TEST(Ket, Examples) {
    expect_amplitudes(ket("01"), {0.0, 1.0, 0.0, 0.0});
    expect_amplitudes(ket("0"), {1.0, 0.0});
    const auto k = ket("111");
    EXPECT_EQ(k.n_qubits(), 3u);
    EXPECT_EQ(k.amplitude(7), Complex{1.0});
    EXPECT_EQ(error_of([] { ket("012"); }), ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { ket(""); }), ErrorKind::WrongDimension);
}

TEST(Ket, BasisIsOrthonormal) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t i = 0; i < dim; ++i) {
            const auto label = BasisLabel::from_index(n, i);
            EXPECT_EQ(label.index(), i);
            EXPECT_EQ(BasisLabel::parse(label.str()).index(), i);
            for (std::size_t j = 0; j < dim; ++j) {
                const Complex ip = inner_prod(ket(label).vector(), ket(BasisLabel::from_index(n, j)).vector());
                EXPECT_EQ(ip, Complex(i == j ? 1.0 : 0.0));
            }
        }
    }
}

TEST(Bra, Examples) {
    EXPECT_EQ(bra(ket("0")), (ComplexMatrix{{1.0, 0.0}}));
    const auto s = state_from_amplitudes({kH, I * kH});
    const auto row = bra(s);
    EXPECT_NEAR(std::abs(row(0, 0) - kH), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(row(0, 1) + I * kH), 0.0, 1e-15);
    Rng rng(20);
    for (int k = 0; k < 50; ++k) {
        const auto r = rng.state(1 + rng.index(3));
        EXPECT_EQ(bra(r), dagger(r.vector()));
    }
}

TEST(TensorStates, Examples) {
    const auto s = tensor_states(ket("0"), ket("1"));
    EXPECT_EQ(s.n_qubits(), 2u);
    expect_amplitudes(s, {0.0, 1.0, 0.0, 0.0});
    expect_amplitudes(tensor_states(bell(0, 0), ket("0")), {kH, 0.0, 0.0, 0.0, 0.0, 0.0, kH, 0.0});
}

TEST(Bell, DisplayedFormulas) {
    expect_amplitudes(bell(0, 0), {kH, 0.0, 0.0, kH});
    expect_amplitudes(bell(0, 1), {0.0, kH, kH, 0.0});
    expect_amplitudes(bell(1, 0), {kH, 0.0, 0.0, -kH});
    expect_amplitudes(bell(1, 1), {0.0, kH, -kH, 0.0});
    EXPECT_EQ(error_of([] { bell(2, 0); }), ErrorKind::OutOfRange);
}

TEST(Bell, PairwiseOrthogonal) {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Complex ip = inner_prod(bell(a / 2, a % 2).vector(), bell(b / 2, b % 2).vector());
            EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-9);
        }
    }
}

TEST(Entanglement, Examples) {
    EXPECT_FALSE(is_product_state_2q(bell(0, 0)));
    EXPECT_TRUE(is_product_state_2q(ket("01")));
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) EXPECT_TRUE(is_entangled_2q(bell(a, b)));
    }
    EXPECT_FALSE(is_entangled_2q(ket("00")));
    EXPECT_FALSE(is_entangled_2q(state_from_amplitudes({kH, kH, 0.0, 0.0})));
    EXPECT_EQ(error_of([] { is_entangled_2q(ket("000")); }), ErrorKind::WrongArity);
    EXPECT_EQ(error_of([] { is_product_state_2q(ket("1")); }), ErrorKind::WrongArity);
}

TEST(Entanglement, ProductsAreDetectedAndFactorUpToPhase) {
    Rng rng(21);
    for (int k = 0; k < 500; ++k) {
        const auto u = rng.state(1);
        const auto w = rng.state(1);
        const auto s = tensor_states(u, w);
        ASSERT_TRUE(is_product_state_2q(s));
        const auto [fu, fw] = factor_product_state_2q(s);
        const auto rebuilt = tensor_states(fu, fw);
        EXPECT_TRUE(states_equal_up_to_phase(rebuilt, s, Tolerance(1e-6)));
        EXPECT_TRUE(states_equal_up_to_phase(fu, u, Tolerance(1e-6)));
        EXPECT_TRUE(states_equal_up_to_phase(fw, w, Tolerance(1e-6)));
    }
    EXPECT_EQ(error_of([] { factor_product_state_2q(bell(0, 0)); }), ErrorKind::NotProductState);
}

TEST(Entanglement, RandomTwoQubitStatesAreEntangled) {
    Rng rng(22);
    for (int k = 0; k < 200; ++k) EXPECT_TRUE(is_entangled_2q(rng.state(2)));
}

TEST(PhaseEquality, DistinguishesGlobalFromRelativePhase) {
    const auto plus = state_from_amplitudes({kH, kH});
    const auto plus_phased = state_from_amplitudes({I * kH, I * kH});
    const auto minus = state_from_amplitudes({kH, -kH});
    EXPECT_FALSE(plus.vector() == plus_phased.vector());
    EXPECT_TRUE(states_equal_up_to_phase(plus, plus_phased));
    EXPECT_FALSE(states_equal_up_to_phase(plus, minus));
    EXPECT_FALSE(states_equal_up_to_phase(plus, bell(0, 0)));
    EXPECT_NEAR(fidelity(plus, plus_phased), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(plus, minus), 0.0, 1e-12);
}
