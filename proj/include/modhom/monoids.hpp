#pragma once

// Split finitely generated commutative monoids N^a + Z^b, maps between them,
// and the repletion of the fold map
//   P-pushout of n copies of M  ->  M
// presented inside (M^gp)^n by "the sum lies in M", together with its
// comparison isomorphism to M + (M^gp / P^gp)^{n-1}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modhom/arith.hpp"
#include "modhom/hochschild.hpp"
#include "modhom/modpair.hpp"

namespace modhom {

/// Element of a generator lattice Z^{a+b}.
using LatticeVector = std::vector<BigInt>;

/// N^a + Z^b; the first a coordinates are the N-generators.
struct FgAbMonoid {
    std::size_t a = 0;
    std::size_t b = 0;

    std::size_t rank() const { return a + b; }
    bool is_group() const { return a == 0; }
    /// N-coordinates non-negative. Throws std::invalid_argument on a length mismatch.
    bool contains(const LatticeVector& v) const;

    friend bool operator==(const FgAbMonoid&, const FgAbMonoid&) = default;
};

/// "N^2+Z^1", "N", "Z^3", "0". Throws std::invalid_argument.
FgAbMonoid parse_monoid(const std::string& text);
std::string to_string(const FgAbMonoid& m);

FgAbMonoid group_completion(const FgAbMonoid& m);

class MonoidMap {
public:
    /// matrix is target.rank() x source.rank(). Throws std::invalid_argument on
    /// a shape mismatch, if an N-generator of the source leaves the target, or if
    /// a Z-generator does not land in the units 0 + Z^b.
    MonoidMap(FgAbMonoid source, FgAbMonoid target, IntMatrix matrix);

    /// 0 -> m.
    static MonoidMap zero(const FgAbMonoid& m);

    const FgAbMonoid& source() const { return source_; }
    const FgAbMonoid& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    LatticeVector apply(const LatticeVector& v) const;

private:
    FgAbMonoid source_;
    FgAbMonoid target_;
    IntMatrix matrix_;
};

/// sum_i g_i in M. Throws std::invalid_argument on a dimension mismatch or an empty tuple.
bool rep_membership(const FgAbMonoid& m, const std::vector<LatticeVector>& g);

/// M^gp / im(P^gp) presented through the Smith form U A V = D of the map matrix:
/// y = U g, coordinate i < rank reduced mod d_i, coordinates >= rank free.
class LatticeQuotient {
public:
    explicit LatticeQuotient(const IntMatrix& relations);

    std::size_t ambient_rank() const { return moduli_.size(); }
    /// d_i > 1 in order.
    std::vector<BigInt> torsion() const;
    std::size_t free_rank() const;

    /// Canonical coordinates of [g] (length ambient_rank; torsion slots in [0, d_i),
    /// trivial slots 0, free slots unrestricted).
    LatticeVector reduce(const LatticeVector& g) const;
    /// Canonical lift U^{-1} y of reduced coordinates.
    LatticeVector lift(const LatticeVector& coords) const;
    LatticeVector add(const LatticeVector& a, const LatticeVector& b) const;
    bool in_image(const LatticeVector& g) const;

private:
    IntMatrix u_;
    IntMatrix u_inv_;
    std::vector<BigInt> moduli_;  // d_i for i < rank, 0 for free slots
};

/// Element of M + (M^gp/P^gp)^{n-1}.
struct SplitElement {
    LatticeVector m;
    std::vector<LatticeVector> quotient;

    friend bool operator==(const SplitElement&, const SplitElement&) = default;
};

class RepletionResult {
public:
    const MonoidMap& structure() const { return map_; }
    std::size_t n() const { return n_; }
    const LatticeQuotient& quotient() const { return quotient_; }

    /// Membership of a representative tuple in the repletion.
    bool contains(const std::vector<LatticeVector>& g) const;
    /// Equality in (pushout)^gp: g - h lies in {(p_i) in im(P^gp)^n : sum p_i = 0}.
    bool equivalent(const std::vector<LatticeVector>& g, const std::vector<LatticeVector>& h) const;

    /// (g_1, ..., g_n) -> (sum g_i, [g_2], ..., [g_n]). Throws std::invalid_argument
    /// if the tuple is not in the repletion.
    SplitElement forward(const std::vector<LatticeVector>& g) const;
    /// (m, q_2, ..., q_n) -> (m - sum lift(q_i), lift(q_2), ..., lift(q_n)).
    std::vector<LatticeVector> backward(const SplitElement& x) const;
    /// Addition in M + (M^gp/P^gp)^{n-1}.
    SplitElement add(const SplitElement& x, const SplitElement& y) const;

private:
    friend RepletionResult repletion_iso(const MonoidMap& p_to_m, std::size_t n);
    RepletionResult(MonoidMap map, std::size_t n);

    MonoidMap map_;
    std::size_t n_;
    LatticeQuotient quotient_;
};

/// Throws std::invalid_argument if n == 0.
RepletionResult repletion_iso(const MonoidMap& p_to_m, std::size_t n);

/// M = M_1 + M_2 with M_1 = N^a and M_2 = Z^b; returns the M_1 coordinates of each entry.
std::vector<LatticeVector> project_to_nonunit_part(const FgAbMonoid& m, const std::vector<LatticeVector>& g);

/// Degree-n tensor (n + 1 factors) of A[1/f]: its x-exponent tuple lies in the
/// repletion of the fold map over N^s (sum >= 0 componentwise) and every y-exponent is >= 0.
/// Throws std::invalid_argument if tensor.size() != n + 1.
bool replete_bar_predicate(const ModulusPair& p, std::size_t n, const Tensor& tensor);

}  // namespace modhom
