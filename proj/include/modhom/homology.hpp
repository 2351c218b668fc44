#pragma once

// Per-multidegree homology: the M-Omega de Rham complex, its cohomology,
// modulus Hochschild dimensions through the HKR isomorphism, modulus
// HC / HC^- / HP dimensions by closed formula and by an independent
// total-complex computation, and a truncated search for HKR homologies.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modhom/arith.hpp"
#include "modhom/forms.hpp"
#include "modhom/hochschild.hpp"
#include "modhom/modpair.hpp"
#include "modhom/parallel.hpp"

namespace modhom {

/// (M-Omega^*, d) restricted to one multidegree. bases[q] spans M-Omega^q and
/// differential[q] is the matrix of d: M-Omega^q -> M-Omega^{q+1}
/// (rows index bases[q+1]); differential[s+t] maps to the zero space.
struct GradedComplex {
    ModulusPair pair;
    Multidegree deg;
    std::vector<std::vector<FormTerm>> bases;
    std::vector<SparseMatrixQ> differential;

    std::size_t top() const { return bases.size() - 1; }
    std::size_t dim(long q) const;
    /// rank of d_q (0 outside 0..top).
    std::size_t rank_d(long q) const;
};

enum class CyclicVariant { HC, HC_MINUS, HP };

const char* to_string(CyclicVariant v);
/// Accepts "hc", "hcminus", "hp" (case-insensitive) and "HC", "HC-", "HC_MINUS".
std::optional<CyclicVariant> parse_variant(const std::string& s);

struct DimensionReport {
    ModulusPair pair;
    Multidegree deg;
    std::string variant;                 // "HH", "PHH", "deRham", "HC", "HC-", "HP"
    std::map<long, std::size_t> dims;    // n -> dimension
    std::map<long, std::size_t> oracle;  // filled by oracle cross-checks only
};

/// Throws std::invalid_argument on a negative y-degree; std::logic_error if d^2 != 0.
GradedComplex build_forms_complex(const ModulusPair& p, const Multidegree& deg);

/// Per-complex cached ranks (dims of the pieces and ranks of each d_q).
struct ComplexRanks {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> ranks;

    explicit ComplexRanks(const GradedComplex& c);
    std::size_t dim(long q) const;
    std::size_t rank_d(long q) const;
    /// dim H^q = dim ker d_q - rank d_{q-1}.
    std::size_t cohomology(long q) const;
};

DimensionReport de_rham_cohomology(const ModulusPair& p, const Multidegree& deg);

/// dim M-Omega^n at deg (equal to dim M-HH_n by the HKR isomorphism).
std::size_t hh_dimension(const ModulusPair& p, const Multidegree& deg, std::size_t n);

/// Closed formulas:
///   HC_n  = dim(Omega^n / d Omega^{n-1}) + sum_{j>=1} h^{n-2j}
///   HC^-_n = dim ker(d_n) + sum_{j>=1} h^{n+2j}
///   HP_n  = sum_p h^{2p-n}
std::size_t cyclic_dims_formula(const ComplexRanks& ranks, CyclicVariant v, long n);
std::size_t cyclic_dims_formula(const ModulusPair& p, const Multidegree& deg, CyclicVariant v, long n);

/// Homology at total degree n of the bicomplex whose column c carries the
/// forms complex with Omega^m in total degree m + 2c and horizontal map d
/// (column c -> column c - 1). HC keeps columns c >= 0, HC^- keeps c <= 0,
/// HP keeps every column. The total complex is assembled as one sparse matrix
/// per degree and its homology is computed by exact rank.
std::size_t cyclic_dims_bicomplex(const GradedComplex& complex, CyclicVariant v, long n);
std::size_t cyclic_dims_bicomplex(const ModulusPair& p, const Multidegree& deg, CyclicVariant v, long n);

// ---------------------------------------------------------------------------
// Tables over a multidegree window. Cells are independent; the parallel path
// and the serial reference produce identical reports.

/// All multidegrees with dx in [x_lo, x_hi]^s and dy in [y_lo, y_hi]^t, in
/// lexicographic order. Throws std::invalid_argument if y_lo < 0 or a range is empty.
std::vector<Multidegree> multidegree_window(const ModulusPair& p, int x_lo, int x_hi, int y_lo, int y_hi);

std::vector<DimensionReport> hh_table(const ModulusPair& p, FormClass cls, const std::vector<Multidegree>& degs,
                                      const std::vector<std::size_t>& qs, Execution exec = Execution::Parallel);

std::vector<DimensionReport> cohomology_table(const ModulusPair& p, const std::vector<Multidegree>& degs,
                                              Execution exec = Execution::Parallel);

/// Formula dims for n in [n_lo, n_hi]; with `oracle` the bicomplex dims too.
std::vector<DimensionReport> cyclic_table(const ModulusPair& p, const std::vector<Multidegree>& degs, CyclicVariant v,
                                          long n_lo, long n_hi, bool oracle, Execution exec = Execution::Parallel);

// ---------------------------------------------------------------------------
// HKR probe

enum class ProbeStatus { Confirmed, Inconclusive };

struct ProbeResult {
    ProbeStatus status = ProbeStatus::Inconclusive;
    /// Smallest pole bound at which a witness was found (when confirmed).
    int pole_bound_used = -1;
    /// w with b(w) = z - eps(e(z)) (when confirmed).
    std::optional<ChainElement> witness;
    std::string note;
};

struct ProbeLimits {
    /// Per multidegree component, the span of w may not exceed this many tensors;
    /// larger windows end the search as inconclusive.
    std::size_t max_columns = 250000;
};

/// Searches w in the span of M-HH tensors of degree n+1 whose factors all have
/// x-exponents >= -pole_bound with b(w) = z - eps(e(z)). Bounds 0..pole_bound
/// are tried in increasing order (the spans are nested).
/// Throws std::invalid_argument if z is not M-HH or not a cycle.
ProbeResult hkr_cycle_probe(const ModulusPair& p, const ChainElement& z, int pole_bound, ProbeLimits limits = {});

/// Every tensor with `factors` factors, multidegree `deg`, x-exponents >= -pole_bound
/// and y-exponents >= 0.
std::vector<Tensor> tensors_in_window(const ModulusPair& p, std::size_t factors, const Multidegree& deg,
                                      int pole_bound, std::size_t max_count);

}  // namespace modhom
