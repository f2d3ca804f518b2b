#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qdirac/error.hpp"

namespace qdirac {

using Complex = std::complex<double>;

/// Comparison threshold for the "equalities" of the matrix semantics.
/// Construction rejects non-positive or non-finite values.
class Tolerance {
public:
    static constexpr double kDefaultEps = 1e-9;

    constexpr Tolerance() = default;
    explicit Tolerance(double eps);

    constexpr double eps() const noexcept { return eps_; }

private:
    double eps_ = kDefaultEps;
};

/// Dense row-major complex matrix. States, gates and machines all live in this
/// carrier; a column vector is a matrix with cols() == 1.
///
/// Shapes are strictly positive and every entry is finite. A matrix is never
/// mutated after construction through the public API.
class ComplexMatrix {
public:
    /// rows x cols zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries; size must equal rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix column(std::vector<Complex> entries);
    static ComplexMatrix basis_column(std::size_t dim, std::size_t index);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_column() const noexcept { return cols_ == 1; }

    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    std::string shape_string() const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& m);

/// Standard product; throws DimensionMismatch naming both shapes.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block (i, j) of the result is a(i, j) * b.
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// sum_i conj(v_i) * w_i over two columns of equal length.
Complex inner_prod(const ComplexMatrix& v, const ComplexMatrix& w);

/// Euclidean length of a column.
double norm(const ComplexMatrix& v);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max(|M^dagger M - I|, |M M^dagger - I|) entrywise. M must be square.
double unitarity_deviation(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, Tolerance tol = {});

/// True iff | |Mv| - |v| | < eps for every probe v. Probes must be nonempty
/// columns of dimension M.cols().
bool is_length_preserving(const ComplexMatrix& m, std::span<const ComplexMatrix> probes,
                          Tolerance tol = {});

/// The deterministic probe set {e_i} u {(e_i + e_j)/sqrt2} u {(e_i + i e_j)/sqrt2}
/// for i < j. Lengths on these probes determine M^dagger M completely, so a
/// non-unitary matrix always changes the length of at least one of them.
std::vector<ComplexMatrix> polarization_probes(std::size_t dim);

/// Re(<v|v><w|w>) - |<v|w>|^2, evaluated as a sum of squares so it is never
/// negative.
double cauchy_schwarz_gap(const ComplexMatrix& v, const ComplexMatrix& w);

}  // namespace qdirac
