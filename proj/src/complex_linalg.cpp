#include "qdirac/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace qdirac {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

using SparseRows = std::vector<std::vector<std::pair<std::size_t, Complex>>>;

// Nonzero entries of each row, or of each column when by_column is set.
SparseRows nonzeros(const ComplexMatrix& m, bool by_column) {
    SparseRows out(by_column ? m.cols() : m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            if (z == Complex{}) continue;
            if (by_column) {
                out[j].emplace_back(i, z);
            } else {
                out[i].emplace_back(j, z);
            }
        }
    }
    return out;
}

// max |G - I| for G(i, j) = sum over (k, v) in outer[i] and (j, w) in inner[k]
// of conj(v) w (conj_outer) or v conj(w). Only touched entries are visited, so
// permutation-like gates on large registers stay cheap.
double gram_deviation(const SparseRows& outer, const SparseRows& inner, bool conj_outer) {
    const std::size_t n = outer.size();
    std::vector<Complex> row(n);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> touched;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [k, v] : outer[i]) {
            for (const auto& [j, w] : inner[k]) {
                row[j] += conj_outer ? std::conj(v) * w : v * std::conj(w);
                if (!seen[j]) {
                    seen[j] = 1;
                    touched.push_back(j);
                }
            }
        }
        worst = std::max(worst, std::abs(row[i] - Complex{1.0}));
        for (std::size_t j : touched) {
            if (j != i) worst = std::max(worst, std::abs(row[j]));
            row[j] = Complex{};
            seen[j] = 0;
        }
        row[i] = Complex{};
        touched.clear();
    }
    return worst;
}

void require_column(const ComplexMatrix& v, const char* what) {
    if (!v.is_column()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + " expects a column, got " + v.shape_string());
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": " + a.shape_string() + " vs " + b.shape_string());
    }
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw Error(ErrorKind::InvalidTolerance, "eps must be finite and > 0");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw Error(ErrorKind::DimensionMismatch, "matrix shape must be positive, got " + shape_string());
    }
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "entry count " + std::to_string(entries_.size()) + " does not match shape " +
                        shape_string());
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    *this = ComplexMatrix(rows_, cols_, std::move(entries_));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return ComplexMatrix(dim, dim, std::move(e));
}

ComplexMatrix ComplexMatrix::column(std::vector<Complex> entries) {
    const auto n = entries.size();
    return ComplexMatrix(n, 1, std::move(entries));
}

ComplexMatrix ComplexMatrix::basis_column(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "basis index " + std::to_string(index) + " >= dimension " + std::to_string(dim));
    }
    std::vector<Complex> e(dim);
    e[index] = 1.0;
    return column(std::move(e));
}

std::string ComplexMatrix::shape_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_;
    return os.str();
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix sum");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix difference");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= b.entries()[k];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
    std::vector<Complex> e(m.entries().begin(), m.entries().end());
    for (auto& z : e) z *= scalar;
    return ComplexMatrix(m.rows(), m.cols(), std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix dagger(const ComplexMatrix& m) {
    std::vector<Complex> e(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            e[j * m.rows() + i] = std::conj(m(i, j));
        }
    }
    return ComplexMatrix(m.cols(), m.rows(), std::move(e));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "cannot multiply " + a.shape_string() + " by " + b.shape_string());
    }
    const std::size_t n = a.rows();
    const std::size_t inner = a.cols();
    const std::size_t m = b.cols();
    std::vector<Complex> e(n * m);
    const auto be = b.entries();
    // i-k-j order keeps the inner loop contiguous in both b and the result.
    for (std::size_t i = 0; i < n; ++i) {
        Complex* out = e.data() + i * m;
        for (std::size_t k = 0; k < inner; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            const Complex* brow = be.data() + k * m;
            for (std::size_t j = 0; j < m; ++j) out[j] += aik * brow[j];
        }
    }
    return ComplexMatrix(n, m, std::move(e));
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    std::vector<Complex> e(rows * cols);
    for (std::size_t ai = 0; ai < a.rows(); ++ai) {
        for (std::size_t aj = 0; aj < a.cols(); ++aj) {
            const Complex s = a(ai, aj);
            for (std::size_t bi = 0; bi < b.rows(); ++bi) {
                const std::size_t r = ai * b.rows() + bi;
                for (std::size_t bj = 0; bj < b.cols(); ++bj) {
                    e[r * cols + aj * b.cols() + bj] = s * b(bi, bj);
                }
            }
        }
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

Complex inner_prod(const ComplexMatrix& v, const ComplexMatrix& w) {
    require_column(v, "inner_prod");
    require_column(w, "inner_prod");
    require_same_shape(v, w, "inner_prod");
    Complex acc{};
    for (std::size_t i = 0; i < v.rows(); ++i) acc += std::conj(v(i, 0)) * w(i, 0);
    return acc;
}

double norm(const ComplexMatrix& v) {
    require_column(v, "norm");
    double acc = 0.0;
    for (const auto& z : v.entries()) acc += std::norm(z);
    return std::sqrt(acc);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double unitarity_deviation(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NotSquare, "unitarity needs a square matrix, got " + m.shape_string());
    }
    const SparseRows rows = nonzeros(m, false);
    const SparseRows cols = nonzeros(m, true);
    return std::max(gram_deviation(cols, rows, true), gram_deviation(rows, cols, false));
}

bool is_unitary(const ComplexMatrix& m, Tolerance tol) { return unitarity_deviation(m) < tol.eps(); }

bool is_length_preserving(const ComplexMatrix& m, std::span<const ComplexMatrix> probes, Tolerance tol) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NotSquare, "length preservation needs a square matrix, got " + m.shape_string());
    }
    if (probes.empty()) {
        throw Error(ErrorKind::EmptyInput, "probe set is empty");
    }
    for (const auto& v : probes) {
        if (!v.is_column() || v.rows() != m.cols()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "probe " + v.shape_string() + " does not fit matrix " + m.shape_string());
        }
    }
    return std::all_of(probes.begin(), probes.end(), [&](const ComplexMatrix& v) {
        return std::abs(norm(m * v) - norm(v)) < tol.eps();
    });
}

std::vector<ComplexMatrix> polarization_probes(std::size_t dim) {
    const double h = 1.0 / std::numbers::sqrt2;
    const Complex i_unit{0.0, 1.0};
    std::vector<ComplexMatrix> probes;
    probes.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) probes.push_back(ComplexMatrix::basis_column(dim, i));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            std::vector<Complex> re(dim), im(dim);
            re[i] = h;
            re[j] = h;
            im[i] = h;
            im[j] = i_unit * h;
            probes.push_back(ComplexMatrix::column(std::move(re)));
            probes.push_back(ComplexMatrix::column(std::move(im)));
        }
    }
    return probes;
}

double cauchy_schwarz_gap(const ComplexMatrix& v, const ComplexMatrix& w) {
    inner_prod(v, w);  // shape checks
    // Lagrange's identity: <v|v><w|w> - |<v|w>|^2 = sum_{i<j} |v_i w_j - v_j w_i|^2.
    // A sum of squares cannot go negative, and for w = c v every term
    // cancels to rounding error of a single product.
    const auto a = v.entries();
    const auto b = w.entries();
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) gap += std::norm(a[i] * b[j] - a[j] * b[i]);
    }
    return gap;
}

}  // namespace qdirac
