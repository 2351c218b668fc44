#include "modhom/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace modhom {

SparseMatrixQ::SparseMatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

void SparseMatrixQ::add(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrixQ::add: index out of range");
    if (value == 0) return;
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += value;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, Entry{c, value});
    }
}

void SparseMatrixQ::set(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrixQ::set: index out of range");
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (value == 0) row.erase(it);
        else it->second = value;
    } else if (value != 0) {
        row.insert(it, Entry{c, value});
    }
}

Rational SparseMatrixQ::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrixQ::get: index out of range");
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

std::size_t SparseMatrixQ::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

VectorQ SparseMatrixQ::multiply(const VectorQ& v) const {
    if (v.size() != cols_) throw std::invalid_argument("SparseMatrixQ::multiply: dimension mismatch");
    VectorQ out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, val] : data_[r]) out[r] += val * v[c];
    return out;
}

SparseMatrixQ SparseMatrixQ::multiply(const SparseMatrixQ& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrixQ::multiply: dimension mismatch");
    SparseMatrixQ out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, a] : data_[r])
            for (const auto& [c, b] : rhs.data_[k]) acc[c] += a * b;
        for (auto& [c, v] : acc)
            if (v != 0) out.data_[r].emplace_back(c, std::move(v));
    }
    return out;
}

SparseMatrixQ SparseMatrixQ::transpose() const {
    SparseMatrixQ out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
    return out;
}

SparseMatrixQ SparseMatrixQ::identity(std::size_t n) {
    SparseMatrixQ out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.data_[i].emplace_back(i, Rational(1));
    return out;
}

SparseMatrixQ SparseMatrixQ::from_dense(const std::vector<std::vector<Rational>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows == 0 ? 0 : dense.front().size();
    SparseMatrixQ out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (dense[r].size() != cols) throw std::invalid_argument("from_dense: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (dense[r][c] != 0) out.data_[r].emplace_back(c, dense[r][c]);
    }
    return out;
}

namespace {

using Row = SparseMatrixQ::Row;

// out = a - factor * b, both sorted by column.
Row axpy(const Row& a, const Rational& factor, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, -factor * ib->second);
            ++ib;
        } else {
            Rational v = ia->second - factor * ib->second;
            if (v != 0) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

// Row echelon form with unit pivots; every stored row's leading column is its
// pivot column.
class Echelon {
public:
    // Reduces `row` against the current pivots and inserts it if nonzero.
    // Returns the new pivot column, if any.
    std::optional<std::size_t> insert(Row row) {
        std::size_t pos = 0;
        while (pos < row.size()) {
            auto it = pivots_.find(row[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            const Rational factor = row[pos].second;
            row = axpy(row, factor, it->second);
            // Entries before pos are untouched: pivot rows only reach columns >= their pivot.
        }
        if (row.empty()) return std::nullopt;
        const Rational lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        const std::size_t col = row.front().first;
        pivots_.emplace(col, std::move(row));
        return col;
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, Row>& pivots() const { return pivots_; }

    // Back substitution: pivot variables from fixed free values (given in x).
    void back_substitute(VectorQ& x, const VectorQ* rhs) const {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const std::size_t col = it->first;
            Rational value = rhs ? (*rhs)[col] : Rational(0);
            const Row& row = it->second;
            for (std::size_t k = 1; k < row.size(); ++k) value -= row[k].second * x[row[k].first];
            x[col] = value;
        }
    }

private:
    std::map<std::size_t, Row> pivots_;
};

}  // namespace

std::size_t rank(const SparseMatrixQ& m) {
    Echelon ech;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) ech.insert(m.row(r));
    return ech.rank();
}

std::vector<VectorQ> kernel_basis(const SparseMatrixQ& m) {
    Echelon ech;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) ech.insert(m.row(r));
    std::vector<VectorQ> basis;
    const auto& piv = ech.pivots();
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (piv.count(free)) continue;
        VectorQ x(m.cols());
        x[free] = 1;
        ech.back_substitute(x, nullptr);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<VectorQ> solve(const SparseMatrixQ& m, const VectorQ& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const std::size_t aug = m.cols();
    Echelon ech;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Row row = m.row(r);
        if (b[r] != 0) row.emplace_back(aug, b[r]);
        if (row.empty()) continue;
        auto col = ech.insert(std::move(row));
        if (col && *col == aug) return std::nullopt;
    }
    // rhs column values sit in each pivot row's augmented entry.
    VectorQ rhs(m.cols());
    for (const auto& [col, row] : ech.pivots())
        if (!row.empty() && row.back().first == aug) rhs[col] = row.back().second;
    VectorQ x(m.cols());
    // Back substitution skipping the augmented column.
    const auto& piv = ech.pivots();
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        const std::size_t col = it->first;
        Rational value = rhs[col];
        const Row& row = it->second;
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k].first != aug) value -= row[k].second * x[row[k].first];
        x[col] = value;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::operator*: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    std::vector<BigInt> out(rows_, BigInt(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: matrix not square");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
        std::swap(a[p], a[c]);
        const Rational lead = a[c][c];
        for (auto& v : a[c]) v /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = a[i][n + j];
            if (v.get_den() != 1) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
            out(i, j) = v.get_num();
        }
    return out;
}

std::vector<BigInt> SmithForm::invariant_factors() const {
    std::vector<BigInt> out;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void row_sub(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
}

// col_i -= q * col_j
void col_sub(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix D = m;
    IntMatrix U = IntMatrix::identity(rows);
    IntMatrix V = IntMatrix::identity(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Smallest nonzero |entry| in the trailing block becomes the pivot.
            bool found = false;
            std::size_t pr = t, pc = t;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (D(i, j) == 0) continue;
                    BigInt v = abs(D(i, j));
                    if (!found || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found) return SmithForm{U, D, V};

            swap_rows(D, t, pr);
            swap_rows(U, t, pr);
            swap_cols(D, t, pc);
            swap_cols(V, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0) continue;
                const BigInt q = floor_div(D(i, t), D(t, t));
                row_sub(D, i, t, q);
                row_sub(U, i, t, q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0) continue;
                const BigInt q = floor_div(D(t, j), D(t, t));
                col_sub(D, j, t, q);
                col_sub(V, j, t, q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold any offending row into row t and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (D(i, j) % D(t, t) != 0) {
                        row_sub(D, t, i, BigInt(-1));
                        row_sub(U, t, i, BigInt(-1));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (D(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) D(t, c) = -D(t, c);
            for (std::size_t c = 0; c < rows; ++c) U(t, c) = -U(t, c);
        }
    }
    return SmithForm{U, D, V};
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace modhom
