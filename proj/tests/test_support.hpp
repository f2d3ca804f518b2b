#pragma once

// Test-only generators and reference implementations. Nothing here calls the
// library's arithmetic: the naive routines work on nested std::vector so they
// stay independent of the code they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qdirac/complex_linalg.hpp"
#include "qdirac/quantum_gate.hpp"
#include "qdirac/quantum_state.hpp"

namespace qdirac::ref {

using Dense = std::vector<std::vector<Complex>>;

inline Dense to_dense(const ComplexMatrix& m) {
    Dense d(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
    }
    return d;
}

inline ComplexMatrix from_dense(const Dense& d) {
    std::vector<Complex> e;
    for (const auto& row : d) e.insert(e.end(), row.begin(), row.end());
    return ComplexMatrix(d.size(), d[0].size(), std::move(e));
}

inline Dense naive_matmul(const Dense& a, const Dense& b) {
    Dense c(a.size(), std::vector<Complex>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < b.size(); ++k) acc += a[i][k] * b[k][j];
            c[i][j] = acc;
        }
    }
    return c;
}

// Entry ((i1,i2),(j1,j2)) = a[i1][j1] * b[i2][j2], written index by index.
inline Dense naive_kron(const Dense& a, const Dense& b) {
    const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Dense c(ar * br, std::vector<Complex>(ac * bc));
    for (std::size_t r = 0; r < ar * br; ++r) {
        for (std::size_t col = 0; col < ac * bc; ++col) c[r][col] = a[r / br][col / bc] * b[r % br][col % bc];
    }
    return c;
}

inline double dense_max_diff(const Dense& a, const Dense& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[0].size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
    return worst;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double gauss() { return normal_(engine_); }
    Complex complex_gauss() { return {gauss(), gauss()}; }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

    std::vector<Complex> vector(std::size_t dim) {
        std::vector<Complex> v(dim);
        for (auto& z : v) z = complex_gauss();
        return v;
    }

    ComplexMatrix matrix(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols, vector(rows * cols));
    }

    ComplexMatrix column(std::size_t dim) { return ComplexMatrix::column(vector(dim)); }

    QuantumState state(std::size_t n_qubits) {
        auto v = vector(std::size_t{1} << n_qubits);
        double len = 0.0;
        for (const auto& z : v) len += std::norm(z);
        len = std::sqrt(len);
        for (auto& z : v) z /= len;
        return state_from_amplitudes(std::move(v));
    }

    /// Unitary from modified Gram-Schmidt on the columns of a Gaussian matrix.
    ComplexMatrix unitary(std::size_t dim) {
        Dense cols(dim, std::vector<Complex>(dim));
        for (auto& c : cols) {
            for (auto& z : c) z = complex_gauss();
        }
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t p = 0; p < k; ++p) {
                Complex dot{};
                for (std::size_t i = 0; i < dim; ++i) dot += std::conj(cols[p][i]) * cols[k][i];
                for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= dot * cols[p][i];
            }
            double len = 0.0;
            for (const auto& z : cols[k]) len += std::norm(z);
            len = std::sqrt(len);
            for (auto& z : cols[k]) z /= len;
        }
        Dense m(dim, std::vector<Complex>(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) m[i][j] = cols[j][i];
        }
        return from_dense(m);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

/// Completes an orthonormal list of columns to a full orthonormal basis with
/// Gram-Schmidt against the standard basis; returns the basis as columns.
inline Dense complete_basis(Dense columns, std::size_t dim) {
    for (std::size_t e = 0; e < dim && columns.size() < dim; ++e) {
        std::vector<Complex> cand(dim);
        cand[e] = 1.0;
        for (const auto& c : columns) {
            Complex dot{};
            for (std::size_t i = 0; i < dim; ++i) dot += std::conj(c[i]) * cand[i];
            for (std::size_t i = 0; i < dim; ++i) cand[i] -= dot * c[i];
        }
        double len = 0.0;
        for (const auto& z : cand) len += std::norm(z);
        len = std::sqrt(len);
        if (len < 1e-6) continue;
        for (auto& z : cand) z /= len;
        columns.push_back(std::move(cand));
    }
    return columns;
}

/// A unitary U with U inputs[k] = outputs[k], for orthonormal inputs and
/// orthonormal outputs of equal count: U = sum_k |out_k><in_k| over completed
/// bases.
inline ComplexMatrix unitary_mapping(const Dense& inputs, const Dense& outputs, std::size_t dim) {
    const Dense in = complete_basis(inputs, dim);
    const Dense out = complete_basis(outputs, dim);
    Dense u(dim, std::vector<Complex>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) u[i][j] += out[k][i] * std::conj(in[k][j]);
        }
    }
    return from_dense(u);
}

inline std::vector<Complex> amplitudes(const QuantumState& s) {
    return {s.vector().entries().begin(), s.vector().entries().end()};
}

}  // namespace qdirac::ref
