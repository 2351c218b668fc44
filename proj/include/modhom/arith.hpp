#pragma once

// Exact arithmetic kernel: GMP-backed rationals and integers, sparse rational
// matrices with exact rank/kernel/solve, and Smith normal form over Z.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modhom {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational. mpq_class arithmetic keeps values in
/// canonical form (reduced, positive denominator).
using Rational = mpq_class;

using VectorQ = std::vector<Rational>;

/// Sparse rational matrix stored row-wise. Each row is a list of
/// (column, value) pairs with strictly increasing columns and no zero values.
class SparseMatrixQ {
public:
    using Entry = std::pair<std::size_t, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrixQ() = default;
    SparseMatrixQ(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Adds `value` to entry (r, c); drops the entry if the sum is zero.
    void add(std::size_t r, std::size_t c, const Rational& value);
    void set(std::size_t r, std::size_t c, const Rational& value);
    Rational get(std::size_t r, std::size_t c) const;

    const Row& row(std::size_t r) const { return data_[r]; }
    std::size_t nonzeros() const;

    VectorQ multiply(const VectorQ& v) const;
    SparseMatrixQ multiply(const SparseMatrixQ& rhs) const;
    SparseMatrixQ transpose() const;
    bool is_zero() const { return nonzeros() == 0; }

    static SparseMatrixQ identity(std::size_t n);
    static SparseMatrixQ from_dense(const std::vector<std::vector<Rational>>& dense);

    friend bool operator==(const SparseMatrixQ&, const SparseMatrixQ&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

/// Exact rank over Q.
std::size_t rank(const SparseMatrixQ& m);

/// Basis of the right kernel {v : m v = 0}; one vector per free column of the
/// reduced row echelon form.
std::vector<VectorQ> kernel_basis(const SparseMatrixQ& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument if b.size() != m.rows().
std::optional<VectorQ> solve(const SparseMatrixQ& m, const VectorQ& b);

/// Dense integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
    IntMatrix transpose() const;
    bool is_diagonal() const;

    static IntMatrix identity(std::size_t n);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix V;  // cols x cols, unimodular

    /// Nonzero diagonal entries of D, in order.
    std::vector<BigInt> invariant_factors() const;
};

/// U * m * V == D.
SmithForm smith_normal_form(const IntMatrix& m);

std::string to_string(const Rational& q);

}  // namespace modhom
