#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace modhom;
using namespace testing;

namespace {

SparseMatrixQ sparse(std::size_t rows, std::size_t cols, const Dense& d) {
    SparseMatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d[r][c]);
    return m;
}

bool all_zero(const VectorQ& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

BigInt gcd_of_minors(const IntMatrix& m, std::size_t k) {
    BigInt g = 0;
    for (const auto& rs : subsets(m.rows(), k))
        for (const auto& cs : subsets(m.cols(), k)) {
            Dense sub;
            for (auto r : rs) {
                std::vector<Rational> row;
                for (auto c : cs) row.emplace_back(m(r, c));
                sub.push_back(row);
            }
            const Rational det = laplace_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(det.get_num()).get_mpz_t());
        }
    return g;
}

IntMatrix rand_int(std::size_t rows, std::size_t cols, int lo, int hi) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = pick(lo, hi);
    return m;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    Rational q(6, -4);
    q.canonicalize();
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(Rational(1, 3) + Rational(2, 3) == 1);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("sparse matrix storage drops zeros") {
    SparseMatrixQ m(2, 3);
    m.add(0, 1, 2);
    m.add(0, 1, -2);
    CHECK(m.nonzeros() == 0);
    m.set(1, 2, Rational(1, 2));
    m.set(1, 0, 3);
    CHECK(m.get(1, 2) == Rational(1, 2));
    CHECK(m.row(1).front().first == 0);
    m.set(1, 0, 0);
    CHECK(m.nonzeros() == 1);
    CHECK(m.transpose().get(2, 1) == Rational(1, 2));
}

TEST_CASE("rank examples") {
    CHECK(rank(SparseMatrixQ(0, 0)) == 0);
    CHECK(rank(SparseMatrixQ::identity(2)) == 2);
    CHECK(rank(SparseMatrixQ::from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(SparseMatrixQ(3, 5)) == 0);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(SparseMatrixQ::identity(3)).empty());
    CHECK(kernel_basis(SparseMatrixQ(1, 3)).size() == 3);
    const auto k = kernel_basis(SparseMatrixQ::from_dense({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(k[0][0] != 0);
}

TEST_CASE("solve examples") {
    const VectorQ b{Rational(1, 2), -3};
    const auto x = solve(SparseMatrixQ::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);
    const auto y = solve(SparseMatrixQ::from_dense({{1, 1}}), VectorQ{3});
    REQUIRE(y);
    CHECK((*y)[0] + (*y)[1] == 3);
    CHECK_FALSE(solve(SparseMatrixQ::from_dense({{0}}), VectorQ{1}));
    CHECK_THROWS_AS(solve(SparseMatrixQ::identity(2), VectorQ{1}), std::invalid_argument);
}

TEST_CASE("rank agrees with the largest nonzero minor") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(pick(1, 4));
        const std::size_t cols = static_cast<std::size_t>(pick(1, 4));
        const Dense d = rand_dense(rows, cols);
        CHECK(rank(sparse(rows, cols, d)) == minor_rank(d, cols));
    }
}

TEST_CASE("rank plus nullity equals columns and kernel vectors are independent") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(pick(1, 6));
        const std::size_t cols = static_cast<std::size_t>(pick(1, 6));
        const SparseMatrixQ m = sparse(rows, cols, rand_dense(rows, cols));
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        for (const auto& v : k) CHECK(all_zero(m.multiply(v)));
        if (!k.empty()) {
            Dense kd(k.begin(), k.end());
            CHECK(minor_rank(kd, cols) == k.size());
        }
    }
}

TEST_CASE("solve succeeds exactly on consistent systems and fails otherwise") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(pick(1, 5));
        const std::size_t cols = static_cast<std::size_t>(pick(1, 5));
        const Dense d = rand_dense(rows, cols);
        const SparseMatrixQ m = sparse(rows, cols, d);
        VectorQ x0(cols);
        for (auto& v : x0) v = rand_coeff();
        const VectorQ b = m.multiply(x0);
        const auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m.multiply(*x) == b);

        VectorQ c(rows);
        for (auto& v : c) v = pick(-3, 3);
        Dense aug = d;
        for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(c[r]);
        const bool consistent = minor_rank(aug, cols + 1) == minor_rank(d, cols);
        const auto y = solve(m, c);
        CHECK(y.has_value() == consistent);
        if (y) CHECK(m.multiply(*y) == c);
    }
}

TEST_CASE("matrix product and transpose") {
    const SparseMatrixQ a = SparseMatrixQ::from_dense({{1, 2}, {0, 1}});
    const SparseMatrixQ b = SparseMatrixQ::from_dense({{3, 0}, {1, 1}});
    CHECK(a.multiply(b) == SparseMatrixQ::from_dense({{5, 2}, {1, 1}}));
    CHECK(a.transpose() == SparseMatrixQ::from_dense({{1, 0}, {2, 1}}));
}

TEST_CASE("determinant against Laplace expansion") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(pick(1, 5));
        const IntMatrix m = rand_int(n, n, -5, 5);
        Dense d(n, std::vector<Rational>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) d[r][c] = m(r, c);
        CHECK(Rational(determinant(m)) == laplace_det(d));
    }
}

TEST_CASE("smith normal form examples") {
    const SmithForm id = smith_normal_form(IntMatrix::identity(2));
    CHECK(id.D == IntMatrix::identity(2));
    CHECK(id.U * IntMatrix::identity(2) * id.V == id.D);

    const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(s.invariant_factors() == std::vector<BigInt>{1, 6});

    const SmithForm z = smith_normal_form(IntMatrix{{0, 0}});
    CHECK(z.D == IntMatrix{{0, 0}});
    CHECK(z.invariant_factors().empty());
}

TEST_CASE("smith normal form invariants and minors") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(pick(1, 4));
        const std::size_t cols = static_cast<std::size_t>(pick(1, 4));
        const IntMatrix m = rand_int(rows, cols, -6, 6);
        const SmithForm f = smith_normal_form(m);
        CHECK(f.U * m * f.V == f.D);
        CHECK(f.D.is_diagonal());
        CHECK(abs(determinant(f.U)) == 1);
        CHECK(abs(determinant(f.V)) == 1);
        const auto inv = f.invariant_factors();
        for (std::size_t i = 0; i < inv.size(); ++i) {
            CHECK(inv[i] > 0);
            if (i + 1 < inv.size()) CHECK(inv[i + 1] % inv[i] == 0);
        }
        // d_1 ... d_k = gcd of the k x k minors.
        BigInt prod = 1;
        for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
            const BigInt g = gcd_of_minors(m, k);
            if (k <= inv.size()) {
                prod *= inv[k - 1];
                CHECK(prod == g);
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("unimodular inverse") {
    const IntMatrix u{{2, 1}, {1, 1}};
    CHECK(unimodular_inverse(u) * u == IntMatrix::identity(2));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}
