#pragma once

// Log differential forms on A[1/f] in the basis
//   x^i y^k  dlog x_{S}  ^  dy_{T},
// with the sub-objects P-Omega (i >= 0) and M-Omega (i >= 1 - r).

#include <compare>
#include <map>
#include <vector>

#include "modhom/arith.hpp"
#include "modhom/modpair.hpp"

namespace modhom {

/// Basis element x^i y^k dlog x_{S} ^ dy_{T}. S, T hold 0-based indices in
/// ascending order. Default ordering is lexicographic on (i, k, S, T).
struct FormTerm {
    Monomial mono;
    std::vector<int> S;
    std::vector<int> T;

    std::size_t degree() const { return S.size() + T.size(); }

    friend auto operator<=>(const FormTerm&, const FormTerm&) = default;
    friend bool operator==(const FormTerm&, const FormTerm&) = default;
};

/// Multidegree of a basis element: (i; k + sum_{l in T} e_l).
Multidegree multidegree_of(const FormTerm& term);

enum class FormClass { P_OMEGA, M_OMEGA, FULL };

const char* to_string(FormClass c);

/// Finite rational combination of basis elements of a fixed degree q.
class LogForm {
public:
    using Terms = std::map<FormTerm, Rational>;

    LogForm(ModulusPair pair, std::size_t degree) : pair_(std::move(pair)), degree_(degree) {}

    /// c * m (a 0-form).
    static LogForm function(const ModulusPair& pair, const Monomial& m, const Rational& c = 1);
    /// c * term.
    static LogForm single(const ModulusPair& pair, FormTerm term, const Rational& c = 1);
    /// dlog x_j and dy_l as 1-forms.
    static LogForm dlog_x(const ModulusPair& pair, std::size_t j);
    static LogForm dy(const ModulusPair& pair, std::size_t l);

    const ModulusPair& pair() const { return pair_; }
    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Throws std::invalid_argument if the term has the wrong degree, a negative
    /// y-exponent, unsorted/repeated letters, or indices out of range.
    void add(const FormTerm& term, const Rational& c);

    LogForm& operator+=(const LogForm& other);
    LogForm& operator-=(const LogForm& other);
    LogForm operator+(const LogForm& other) const;
    LogForm operator-(const LogForm& other) const;
    LogForm operator*(const Rational& c) const;
    /// Multiplication by a monomial function.
    LogForm times(const Monomial& m) const;

    friend bool operator==(const LogForm& a, const LogForm& b) {
        return a.pair_ == b.pair_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const LogForm& other) const;

    ModulusPair pair_;
    std::size_t degree_;
    Terms terms_;
};

/// Tightest class every term satisfies (P_OMEGA ⊂ M_OMEGA ⊂ FULL).
FormClass classify(const LogForm& form);
bool term_in_class(const ModulusPair& p, const FormTerm& term, FormClass c);

/// Graded product. Throws std::invalid_argument on a pair mismatch.
LogForm wedge(const LogForm& a, const LogForm& b);

/// De Rham differential of Omega^*_{A[1/f]} in the dlog basis.
LogForm de_rham_d(const LogForm& form);

/// d of a single monomial function: m * sum_j i_j dlog x_j + sum_l k_l (m / y_l) dy_l.
LogForm d_monomial(const ModulusPair& p, const Monomial& m);

/// All basis elements of degree q and multidegree `deg` in the given class, in
/// ascending (i, k, S, T) order. Throws std::invalid_argument for FULL, for a
/// negative y-degree, or for a multidegree of the wrong shape.
std::vector<FormTerm> basis_of(const ModulusPair& p, FormClass cls, std::size_t q, const Multidegree& deg);

}  // namespace modhom
