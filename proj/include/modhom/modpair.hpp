#pragma once

// The affine local model (A, f) = (k[x_1..x_s, y_1..y_t], x_1^{r_1} ... x_s^{r_s}),
// its Laurent monomials and the membership predicates for A, A[1/f], units and
// MO(A, f) = sqrt(f)/f = x^{1-r} A.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace modhom {

/// Exponent grading: dx over the modulus variables, dy over the smooth ones.
struct Multidegree {
    std::vector<int> dx;
    std::vector<int> dy;

    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
    friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

/// x^i y^k. As an element of A[1/f] k >= 0; as an element of A also i >= 0.
struct Monomial {
    std::vector<int> i;
    std::vector<int> k;

    static Monomial unit(std::size_t s, std::size_t t) {
        return Monomial{std::vector<int>(s, 0), std::vector<int>(t, 0)};
    }

    bool is_one() const;
    Monomial operator*(const Monomial& other) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class ModulusPair {
public:
    ModulusPair() = default;
    /// Throws std::invalid_argument unless r.size() == s and every r_j >= 1.
    ModulusPair(std::size_t s, std::size_t t, std::vector<int> r);

    std::size_t s() const { return s_; }
    std::size_t t() const { return t_; }
    const std::vector<int>& r() const { return r_; }

    Monomial one() const { return Monomial::unit(s_, t_); }
    /// x_j (0-based j).
    Monomial x(std::size_t j, int power = 1) const;
    /// y_l (0-based l).
    Monomial y(std::size_t l, int power = 1) const;

    /// Throws std::invalid_argument if the exponent vectors have the wrong length.
    void check(const Monomial& m) const;
    void check(const Multidegree& d) const;

    /// Pole bound 1 - r_j of MO(A, f) in the j-th modulus variable.
    int mo_bound(std::size_t j) const { return 1 - r_[j]; }
    bool reduced() const;  // all r_j == 1, i.e. MO(A, f) == A

    friend bool operator==(const ModulusPair&, const ModulusPair&) = default;

private:
    std::size_t s_ = 0;
    std::size_t t_ = 0;
    std::vector<int> r_;
};

bool in_ring(const ModulusPair& p, const Monomial& m);
/// Membership in A[1/f]: k >= 0.
bool in_localization(const ModulusPair& p, const Monomial& m);
bool is_unit_monomial(const ModulusPair& p, const Monomial& m);
bool in_MO(const ModulusPair& p, const Monomial& m);

Multidegree multidegree_of(const Monomial& m);
Multidegree operator+(const Multidegree& a, const Multidegree& b);

/// x-exponent vector passes the componentwise bound `i >= 0` (P) or `i >= 1 - r` (M).
bool x_exponents_at_least_zero(const std::vector<int>& i);
bool x_exponents_in_MO(const ModulusPair& p, const std::vector<int>& i);

std::string to_string(const Multidegree& d);

}  // namespace modhom
