#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qdirac/json_io.hpp"
#include "test_support.hpp"

using namespace qdirac;
using qdirac::ref::Rng;

namespace {

ErrorKind error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ParseError;
}

}  // namespace

TEST(JsonIo, MatrixRoundTripIsExact) {
    Rng rng(70);
    for (int k = 0; k < 100; ++k) {
        const auto m = rng.matrix(1 + rng.index(5), 1 + rng.index(5));
        EXPECT_EQ(matrix_from_json(to_json(m)), m);
        // Through text as well: nlohmann prints doubles with round-trip precision.
        EXPECT_EQ(matrix_from_json(Json::parse(to_json(m).dump())), m);
    }
}

TEST(JsonIo, StateGateMachineRoundTrip) {
    Rng rng(71);
    for (int k = 0; k < 50; ++k) {
        const auto s = rng.state(1 + rng.index(3));
        EXPECT_EQ(state_from_json(Json::parse(to_json(s).dump())).vector(), s.vector());
        EXPECT_EQ(state_from_json(Json{{"state", to_json(s)}}).vector(), s.vector());
        const auto g = make_gate(2, rng.unitary(4));
        const auto g2 = gate_from_json(Json::parse(to_json(g).dump()));
        EXPECT_EQ(g2.matrix(), g.matrix());
        EXPECT_EQ(g2.n_qubits(), 2u);
    }
    const auto m = machine_from_json(Json::parse(to_json(basis_cloner(2)).dump()));
    EXPECT_EQ(m.n, 2u);
    EXPECT_EQ(m.unitary.matrix(), basis_cloner(2).unitary.matrix());
    EXPECT_EQ(m.ancilla.vector(), ket("00").vector());
}

TEST(JsonIo, SchemaShape) {
    const auto j = to_json(ket("01"));
    EXPECT_EQ(j["n_qubits"], 2);
    ASSERT_EQ(j["amplitudes"].size(), 4u);
    EXPECT_EQ(j["amplitudes"][1][0], 1.0);
    EXPECT_EQ(j["amplitudes"][1][1], 0.0);
}

TEST(JsonIo, MalformedDocuments) {
    EXPECT_EQ(error_of([] { matrix_from_json(Json::object()); }), ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { matrix_from_json(Json{{"rows", 1}, {"cols", 1}, {"entries", {{1}}}}); }),
              ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { matrix_from_json(Json{{"rows", -1}, {"cols", 1}, {"entries", Json::array()}}); }),
              ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { state_from_json(Json{{"n_qubits", 1}}); }), ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { state_from_json(Json{{"n_qubits", 1}, {"amplitudes", {{"a", 0}, {0, 0}}}}); }),
              ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { machine_from_json(Json{{"n", 1}}); }), ErrorKind::ParseError);
    EXPECT_EQ(error_of([] { read_json_file("/nonexistent/qdirac.json"); }), ErrorKind::ParseError);
}

TEST(JsonIo, DomainErrorsPassThrough) {
    EXPECT_EQ(error_of([] { state_from_json(Json{{"n_qubits", 1}, {"amplitudes", {{1, 0}, {1, 0}}}}); }),
              ErrorKind::NotNormalized);
    EXPECT_EQ(error_of([] { state_from_json(Json{{"n_qubits", 2}, {"amplitudes", {{1, 0}, {0, 0}}}}); }),
              ErrorKind::WrongDimension);
}

TEST(JsonIo, ReadsFilesAndRejectsBadSyntax) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "qdirac_json_io_good.json";
    const auto bad = dir / "qdirac_json_io_bad.json";
    std::ofstream(good) << to_json(bell(1, 1)).dump();
    std::ofstream(bad) << "{\"n_qubits\": 2,";
    EXPECT_EQ(state_from_json(read_json_file(good)).vector(), bell(1, 1).vector());
    EXPECT_EQ(error_of([&] { read_json_file(bad); }), ErrorKind::ParseError);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}
