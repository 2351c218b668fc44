#pragma once

// Hand-rolled generators and small brute-force oracles shared by the unit tests.

#include <algorithm>
#include <random>
#include <vector>

#include "modhom/arith.hpp"
#include "modhom/forms.hpp"
#include "modhom/hochschild.hpp"
#include "modhom/modpair.hpp"

namespace testing {

using namespace modhom;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611ULL);
    return g;
}

inline int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational rand_coeff() {
    int n = 0;
    while (n == 0) n = pick(-4, 4);
    Rational q(n, pick(1, 3));
    q.canonicalize();
    return q;
}

inline ModulusPair rand_pair(int max_s = 2, int max_t = 2, int max_r = 3) {
    const int s = pick(0, max_s);
    const int t = pick(0, max_t);
    std::vector<int> r(static_cast<std::size_t>(s));
    for (auto& v : r) v = pick(1, max_r);
    return ModulusPair(static_cast<std::size_t>(s), static_cast<std::size_t>(t), r);
}

inline Monomial rand_monomial(const ModulusPair& p, int lo = -3, int hi = 3) {
    Monomial m = p.one();
    for (auto& v : m.i) v = pick(lo, hi);
    for (auto& v : m.k) v = pick(0, std::max(0, hi));
    return m;
}

/// Arbitrary chain of A[1/f] (no class restriction).
inline ChainElement rand_chain(const ModulusPair& p, std::size_t n, int terms = 3, int lo = -3, int hi = 3) {
    ChainElement c(p, n);
    for (int k = 0; k < terms; ++k) {
        Tensor t;
        for (std::size_t f = 0; f <= n; ++f) t.push_back(rand_monomial(p, lo, hi));
        c.add(t, rand_coeff());
    }
    return c;
}

/// Rejection-samples a chain whose tensors all satisfy the class predicate.
inline ChainElement rand_class_chain(const ModulusPair& p, std::size_t n, ChainClass cls, int terms = 2) {
    ChainElement c(p, n);
    for (int tries = 0; static_cast<int>(c.terms().size()) < terms && tries < 1000; ++tries) {
        Tensor t;
        for (std::size_t f = 0; f <= n; ++f) t.push_back(rand_monomial(p, -2, 3));
        if (tensor_in_class(p, t, cls)) c.add(t, rand_coeff());
    }
    return c;
}

inline FormTerm rand_form_term(const ModulusPair& p, std::size_t q, int lo = -3, int hi = 3) {
    std::vector<std::size_t> letters(p.s() + p.t());
    for (std::size_t a = 0; a < letters.size(); ++a) letters[a] = a;
    std::shuffle(letters.begin(), letters.end(), rng());
    FormTerm term{rand_monomial(p, lo, hi), {}, {}};
    for (std::size_t a = 0; a < q; ++a) {
        if (letters[a] < p.s()) term.S.push_back(letters[a]);
        else term.T.push_back(letters[a] - p.s());
    }
    std::sort(term.S.begin(), term.S.end());
    std::sort(term.T.begin(), term.T.end());
    return term;
}

inline LogForm rand_form(const ModulusPair& p, std::size_t q, int terms = 3, int lo = -3, int hi = 3) {
    LogForm w(p, q);
    for (int k = 0; k < terms; ++k) w.add(rand_form_term(p, q, lo, hi), rand_coeff());
    return w;
}

/// Keeps only the terms of the requested class.
inline LogForm restrict_to(const LogForm& w, FormClass cls) {
    LogForm out(w.pair(), w.degree());
    for (const auto& [term, c] : w.terms())
        if (term_in_class(w.pair(), term, cls)) out.add(term, c);
    return out;
}

// ---------------------------------------------------------------------------
// Dense oracles

using Dense = std::vector<std::vector<Rational>>;

/// Laplace expansion along the first row.
inline Rational laplace_det(const Dense& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Dense minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Rational term = m[0][c] * laplace_det(minor);
        total += c % 2 == 0 ? term : Rational(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

/// Rank as the largest order of a nonzero minor.
inline std::size_t minor_rank(const Dense& m, std::size_t cols) {
    const std::size_t rows = m.size();
    for (std::size_t k = std::min(rows, cols); k > 0; --k)
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                Dense sub;
                for (auto r : rs) {
                    std::vector<Rational> row;
                    for (auto c : cs) row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                if (laplace_det(sub) != 0) return k;
            }
    return 0;
}

inline Dense rand_dense(std::size_t rows, std::size_t cols, int lo = -3, int hi = 3, int zero_weight = 2) {
    Dense m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
        for (auto& v : row) v = pick(0, zero_weight) == 0 ? Rational(pick(lo, hi)) : Rational(0);
    return m;
}

}  // namespace testing
