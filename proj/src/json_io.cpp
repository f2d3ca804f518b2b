#include "qdirac/json_io.hpp"

#include <fstream>

namespace qdirac {

namespace {

Json complex_list(std::span<const Complex> values) {
    Json out = Json::array();
    for (const auto& z : values) out.push_back({z.real(), z.imag()});
    return out;
}

std::vector<Complex> complex_list_from(const Json& j, const char* field) {
    if (!j.is_array()) {
        throw Error(ErrorKind::ParseError, std::string("'") + field + "' must be an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw Error(ErrorKind::ParseError, std::string("'") + field + "' entries must be [re, im] numbers");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

std::size_t positive_field(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_number_integer() || j[field].get<long long>() <= 0) {
        throw Error(ErrorKind::ParseError, std::string("missing or invalid positive integer '") + field + "'");
    }
    return j[field].get<std::size_t>();
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", complex_list(m.entries())}};
}

Json to_json(const QuantumState& s) {
    return Json{{"n_qubits", s.n_qubits()}, {"amplitudes", complex_list(s.vector().entries())}};
}

Json to_json(const Gate& g) {
    Json j = to_json(g.matrix());
    j["n_qubits"] = g.n_qubits();
    return j;
}

Json to_json(const QuantumMachine& m) {
    return Json{{"n", m.n}, {"ancilla", to_json(m.ancilla)}, {"unitary", to_json(m.unitary)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = positive_field(j, "rows");
    const std::size_t cols = positive_field(j, "cols");
    if (!j.contains("entries")) {
        throw Error(ErrorKind::ParseError, "missing 'entries'");
    }
    return ComplexMatrix(rows, cols, complex_list_from(j["entries"], "entries"));
}

QuantumState state_from_json(const Json& j, Tolerance tol) {
    if (j.is_object() && j.contains("state") && !j.contains("amplitudes")) {
        return state_from_json(j["state"], tol);
    }
    const std::size_t n = positive_field(j, "n_qubits");
    if (!j.contains("amplitudes")) {
        throw Error(ErrorKind::ParseError, "missing 'amplitudes'");
    }
    return make_state(n, ComplexMatrix::column(complex_list_from(j["amplitudes"], "amplitudes")), tol);
}

Gate gate_from_json(const Json& j, Tolerance tol) {
    return make_gate(positive_field(j, "n_qubits"), matrix_from_json(j), tol);
}

QuantumMachine machine_from_json(const Json& j, Tolerance tol) {
    const std::size_t n = positive_field(j, "n");
    if (!j.contains("ancilla") || !j.contains("unitary")) {
        throw Error(ErrorKind::ParseError, "machine needs 'ancilla' and 'unitary'");
    }
    return make_machine(n, state_from_json(j["ancilla"], tol), gate_from_json(j["unitary"], tol));
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "'" + path.string() + "': " + e.what());
    }
}

}  // namespace qdirac
