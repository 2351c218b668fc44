#pragma once

// Chain-level Hochschild theory of A[1/f] on monomial tensors
//   m_0 (x) m_1 (x) ... (x) m_n,
// with the simplicial operators, b, the cyclic rotation t, Connes' B, the
// shuffle product and the HKR comparison maps e and eps.
//
// The modulus sub-complexes are cut out by a predicate on the x-exponent sum
// of a tensor: P-HH needs sum_j i_j >= 0 (the product of the unit parts lies
// in A) and M-HH needs sum_j i_j >= 1 - r. The second predicate is the
// monomial spanning description of MO(A, f) * P-HH: multiplying factor 0 of a
// P-HH tensor by x^{1-r+a} (a >= 0) shifts the exponent sum by exactly that
// amount, and every tensor with sum >= 1 - r arises this way.

#include <map>
#include <vector>

#include "modhom/arith.hpp"
#include "modhom/forms.hpp"
#include "modhom/modpair.hpp"

namespace modhom {

using Tensor = std::vector<Monomial>;

enum class ChainClass { P_HH, M_HH, FULL_HH };

const char* to_string(ChainClass c);

/// Sum of the factors' multidegrees.
Multidegree multidegree_of(const Tensor& tensor);

class ChainElement {
public:
    using Terms = std::map<Tensor, Rational>;

    ChainElement(ModulusPair pair, std::size_t degree) : pair_(std::move(pair)), degree_(degree) {}

    static ChainElement single(const ModulusPair& pair, Tensor tensor, const Rational& c = 1);

    const ModulusPair& pair() const { return pair_; }
    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Throws std::invalid_argument if the tensor has the wrong number of factors
    /// or a factor outside A[1/f].
    void add(const Tensor& tensor, const Rational& c);

    ChainElement& operator+=(const ChainElement& other);
    ChainElement& operator-=(const ChainElement& other);
    ChainElement operator+(const ChainElement& other) const;
    ChainElement operator-(const ChainElement& other) const;
    ChainElement operator*(const Rational& c) const;

    friend bool operator==(const ChainElement& a, const ChainElement& b) {
        return a.pair_ == b.pair_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const ChainElement& other) const;

    ModulusPair pair_;
    std::size_t degree_;
    Terms terms_;
};

bool tensor_in_class(const ModulusPair& p, const Tensor& tensor, ChainClass c);
ChainClass classify_chain(const ChainElement& c);

/// d_idx; requires degree >= 1 and idx <= degree.
ChainElement face(const ChainElement& c, std::size_t idx);
/// s_idx; requires idx <= degree.
ChainElement degeneracy(const ChainElement& c, std::size_t idx);
/// sum_i (-1)^i d_i. On degree 0 returns the zero element of degree 0.
ChainElement hochschild_b(const ChainElement& c);
/// (m_0, ..., m_n) -> (m_n, m_0, ..., m_{n-1}).
ChainElement cyclic_t(const ChainElement& c);
/// (1 - (-1)^{n+1} t_{n+1}) t_{n+1} s_n (sum_{i=0}^n (-1)^{ni} t_n^i).
ChainElement connes_B(const ChainElement& c);
/// Signed (p, q)-shuffle product; factor 0 multiplies.
ChainElement shuffle(const ChainElement& a, const ChainElement& b);

/// e(m_0 (x) ... (x) m_n) = (1/n!) m_0 dm_1 ^ ... ^ dm_n.
LogForm hkr_e(const ChainElement& c);
/// Antisymmetrization section of e. Throws std::invalid_argument unless the
/// form classifies as M_OMEGA (or tighter).
ChainElement hkr_eps(const LogForm& form);
/// Same map without the class precondition (any form of Omega_{A[1/f]}).
ChainElement hkr_eps_unchecked(const LogForm& form);

/// Degree-1 chain homotopy: returns w with
///   b(w) = z - eps(e(z))
/// for a degree-1 chain z, built by peeling one letter at a time off the
/// second factor with b(m (x) u (x) v) = mu (x) v - m (x) uv + vm (x) u.
ChainElement degree_one_homotopy(const ChainElement& z);

}  // namespace modhom
