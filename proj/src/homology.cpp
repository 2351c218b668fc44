#include "modhom/homology.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace modhom {

std::size_t GradedComplex::dim(long q) const {
    if (q < 0 || q > static_cast<long>(top())) return 0;
    return bases[static_cast<std::size_t>(q)].size();
}

std::size_t GradedComplex::rank_d(long q) const {
    if (q < 0 || q > static_cast<long>(top())) return 0;
    return rank(differential[static_cast<std::size_t>(q)]);
}

const char* to_string(CyclicVariant v) {
    switch (v) {
        case CyclicVariant::HC: return "HC";
        case CyclicVariant::HC_MINUS: return "HC-";
        case CyclicVariant::HP: return "HP";
    }
    return "?";
}

std::optional<CyclicVariant> parse_variant(const std::string& s) {
    std::string lower;
    for (char ch : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "hc") return CyclicVariant::HC;
    if (lower == "hcminus" || lower == "hc-" || lower == "hc_minus") return CyclicVariant::HC_MINUS;
    if (lower == "hp") return CyclicVariant::HP;
    return std::nullopt;
}

GradedComplex build_forms_complex(const ModulusPair& p, const Multidegree& deg) {
    GradedComplex c{p, deg, {}, {}};
    const std::size_t top = p.s() + p.t();
    for (std::size_t q = 0; q <= top; ++q) c.bases.push_back(basis_of(p, FormClass::M_OMEGA, q, deg));

    for (std::size_t q = 0; q <= top; ++q) {
        const auto& src = c.bases[q];
        const std::size_t target_size = q < top ? c.bases[q + 1].size() : 0;
        SparseMatrixQ m(target_size, src.size());
        if (q < top) {
            std::map<FormTerm, std::size_t> index;
            for (std::size_t r = 0; r < c.bases[q + 1].size(); ++r) index.emplace(c.bases[q + 1][r], r);
            for (std::size_t col = 0; col < src.size(); ++col) {
                const LogForm image = de_rham_d(LogForm::single(p, src[col]));
                for (const auto& [term, v] : image.terms()) {
                    auto it = index.find(term);
                    if (it == index.end())
                        throw std::logic_error("build_forms_complex: d left the M-Omega graded piece");
                    m.add(it->second, col, v);
                }
            }
        }
        c.differential.push_back(std::move(m));
    }
    for (std::size_t q = 0; q + 1 < top; ++q)
        if (!c.differential[q + 1].multiply(c.differential[q]).is_zero())
            throw std::logic_error("build_forms_complex: d^2 != 0");
    return c;
}

ComplexRanks::ComplexRanks(const GradedComplex& c) {
    for (std::size_t q = 0; q <= c.top(); ++q) {
        dims.push_back(c.bases[q].size());
        ranks.push_back(rank(c.differential[q]));
    }
}

std::size_t ComplexRanks::dim(long q) const {
    if (q < 0 || q >= static_cast<long>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(q)];
}

std::size_t ComplexRanks::rank_d(long q) const {
    if (q < 0 || q >= static_cast<long>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(q)];
}

std::size_t ComplexRanks::cohomology(long q) const {
    return dim(q) - rank_d(q) - rank_d(q - 1);
}

DimensionReport de_rham_cohomology(const ModulusPair& p, const Multidegree& deg) {
    const ComplexRanks ranks(build_forms_complex(p, deg));
    DimensionReport out{p, deg, "deRham", {}, {}};
    for (long q = 0; q <= static_cast<long>(p.s() + p.t()); ++q) out.dims[q] = ranks.cohomology(q);
    return out;
}

std::size_t hh_dimension(const ModulusPair& p, const Multidegree& deg, std::size_t n) {
    return basis_of(p, FormClass::M_OMEGA, n, deg).size();
}

std::size_t cyclic_dims_formula(const ComplexRanks& r, CyclicVariant v, long n) {
    const long top = static_cast<long>(r.dims.size()) - 1;
    std::size_t total = 0;
    switch (v) {
        case CyclicVariant::HC:
            if (n < 0) return 0;
            total = r.dim(n) - r.rank_d(n - 1);
            for (long q = n - 2; q >= 0; q -= 2) total += r.cohomology(q);
            return total;
        case CyclicVariant::HC_MINUS:
            total = r.dim(n) - r.rank_d(n);
            for (long q = n + 2; q <= top; q += 2)
                if (q >= 0) total += r.cohomology(q);
            return total;
        case CyclicVariant::HP:
            for (long q = 0; q <= top; ++q)
                if (((q + n) % 2 + 2) % 2 == 0) total += r.cohomology(q);
            return total;
    }
    return 0;
}

std::size_t cyclic_dims_formula(const ModulusPair& p, const Multidegree& deg, CyclicVariant v, long n) {
    return cyclic_dims_formula(ComplexRanks(build_forms_complex(p, deg)), v, n);
}

namespace {

bool column_allowed(CyclicVariant v, long c) {
    switch (v) {
        case CyclicVariant::HC: return c >= 0;
        case CyclicVariant::HC_MINUS: return c <= 0;
        case CyclicVariant::HP: return true;
    }
    return false;
}

// Blocks of the total complex in degree n: (column c, form degree m = n - 2c).
struct TotalBlock {
    long column;
    std::size_t form_degree;
    std::size_t offset;
};

std::vector<TotalBlock> total_blocks(const GradedComplex& cx, CyclicVariant v, long n, std::size_t& size) {
    std::vector<TotalBlock> out;
    size = 0;
    const long top = static_cast<long>(cx.top());
    // m = n - 2c in [0, top]  <=>  c in [(n - top)/2, n/2]
    for (long m = 0; m <= top; ++m) {
        if (((n - m) % 2 + 2) % 2 != 0) continue;
        const long c = (n - m) / 2;
        if (!column_allowed(v, c)) continue;
        out.push_back(TotalBlock{c, static_cast<std::size_t>(m), size});
        size += cx.dim(m);
    }
    return out;
}

// D_n : Tot_n -> Tot_{n-1}
SparseMatrixQ total_differential(const GradedComplex& cx, CyclicVariant v, long n) {
    std::size_t src_size = 0, dst_size = 0;
    const auto src = total_blocks(cx, v, n, src_size);
    const auto dst = total_blocks(cx, v, n - 1, dst_size);
    SparseMatrixQ out(dst_size, src_size);
    for (const auto& b : src) {
        // Omega^m in column c maps by d into Omega^{m+1} in column c - 1.
        auto it = std::find_if(dst.begin(), dst.end(), [&](const TotalBlock& t) {
            return t.column == b.column - 1 && t.form_degree == b.form_degree + 1;
        });
        if (it == dst.end()) continue;
        const SparseMatrixQ& d = cx.differential[b.form_degree];
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (const auto& [c, val] : d.row(r)) out.add(it->offset + r, b.offset + c, val);
    }
    return out;
}

}  // namespace

std::size_t cyclic_dims_bicomplex(const GradedComplex& cx, CyclicVariant v, long n) {
    const SparseMatrixQ outgoing = total_differential(cx, v, n);
    const SparseMatrixQ incoming = total_differential(cx, v, n + 1);
    return outgoing.cols() - rank(outgoing) - rank(incoming);
}

std::size_t cyclic_dims_bicomplex(const ModulusPair& p, const Multidegree& deg, CyclicVariant v, long n) {
    return cyclic_dims_bicomplex(build_forms_complex(p, deg), v, n);
}

std::vector<Multidegree> multidegree_window(const ModulusPair& p, int x_lo, int x_hi, int y_lo, int y_hi) {
    if (y_lo < 0) throw std::invalid_argument("multidegree_window: y-degrees must be non-negative");
    if ((p.s() > 0 && x_lo > x_hi) || (p.t() > 0 && y_lo > y_hi))
        throw std::invalid_argument("multidegree_window: empty range");
    std::vector<Multidegree> out;
    Multidegree d{std::vector<int>(p.s(), x_lo), std::vector<int>(p.t(), y_lo)};
    while (true) {
        out.push_back(d);
        // Odometer over (dx, dy), last coordinate fastest.
        long pos = static_cast<long>(p.s() + p.t()) - 1;
        for (; pos >= 0; --pos) {
            const bool is_x = pos < static_cast<long>(p.s());
            int& slot = is_x ? d.dx[static_cast<std::size_t>(pos)]
                             : d.dy[static_cast<std::size_t>(pos) - p.s()];
            const int hi = is_x ? x_hi : y_hi;
            const int lo = is_x ? x_lo : y_lo;
            if (slot < hi) {
                ++slot;
                break;
            }
            slot = lo;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<DimensionReport> hh_table(const ModulusPair& p, FormClass cls, const std::vector<Multidegree>& degs,
                                      const std::vector<std::size_t>& qs, Execution exec) {
    return map_indices<DimensionReport>(
        degs.size(),
        [&](std::size_t idx) {
            DimensionReport r{p, degs[idx], cls == FormClass::P_OMEGA ? "PHH" : "HH", {}, {}};
            for (std::size_t q : qs) r.dims[static_cast<long>(q)] = basis_of(p, cls, q, degs[idx]).size();
            return r;
        },
        exec);
}

std::vector<DimensionReport> cohomology_table(const ModulusPair& p, const std::vector<Multidegree>& degs,
                                              Execution exec) {
    return map_indices<DimensionReport>(
        degs.size(), [&](std::size_t idx) { return de_rham_cohomology(p, degs[idx]); }, exec);
}

std::vector<DimensionReport> cyclic_table(const ModulusPair& p, const std::vector<Multidegree>& degs, CyclicVariant v,
                                          long n_lo, long n_hi, bool oracle, Execution exec) {
    return map_indices<DimensionReport>(
        degs.size(),
        [&](std::size_t idx) {
            const GradedComplex cx = build_forms_complex(p, degs[idx]);
            const ComplexRanks ranks(cx);
            DimensionReport r{p, degs[idx], to_string(v), {}, {}};
            for (long n = n_lo; n <= n_hi; ++n) {
                r.dims[n] = cyclic_dims_formula(ranks, v, n);
                if (oracle) r.oracle[n] = cyclic_dims_bicomplex(cx, v, n);
            }
            return r;
        },
        exec);
}

// ---------------------------------------------------------------------------
// Probe

namespace {

// All vectors of `parts` integers >= lo summing to total.
void compositions(int total, std::size_t parts, int lo, std::vector<std::vector<int>>& out) {
    std::vector<int> current(parts, lo);
    const long budget = static_cast<long>(total) - static_cast<long>(parts) * lo;
    if (parts == 0 || budget < 0) return;
    auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
        if (pos + 1 == parts) {
            current[pos] = lo + static_cast<int>(remaining);
            out.push_back(current);
            return;
        }
        for (long a = 0; a <= remaining; ++a) {
            current[pos] = lo + static_cast<int>(a);
            self(self, pos + 1, remaining - a);
        }
    };
    rec(rec, 0, budget);
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

std::vector<Tensor> tensors_in_window(const ModulusPair& p, std::size_t factors, const Multidegree& deg,
                                      int pole_bound, std::size_t max_count) {
    p.check(deg);
    BigInt count = 1;
    for (int dx : deg.dx)
        count *= binomial(dx + static_cast<long>(factors) * pole_bound + static_cast<long>(factors) - 1,
                          static_cast<long>(factors) - 1);
    for (int dy : deg.dy) count *= binomial(dy + static_cast<long>(factors) - 1, static_cast<long>(factors) - 1);
    if (count > BigInt(static_cast<unsigned long>(max_count)))
        throw std::length_error("tensors_in_window: window exceeds the column limit");

    std::vector<std::vector<std::vector<int>>> per_coord;
    for (int dx : deg.dx) {
        per_coord.emplace_back();
        compositions(dx, factors, -pole_bound, per_coord.back());
    }
    for (int dy : deg.dy) {
        per_coord.emplace_back();
        compositions(dy, factors, 0, per_coord.back());
    }
    std::vector<Tensor> out;
    for (const auto& c : per_coord)
        if (c.empty()) return out;

    std::vector<std::size_t> choice(per_coord.size(), 0);
    while (true) {
        Tensor t(factors, p.one());
        for (std::size_t coord = 0; coord < per_coord.size(); ++coord) {
            const auto& parts = per_coord[coord][choice[coord]];
            for (std::size_t f = 0; f < factors; ++f) {
                if (coord < p.s()) t[f].i[coord] = parts[f];
                else t[f].k[coord - p.s()] = parts[f];
            }
        }
        out.push_back(std::move(t));
        std::size_t pos = 0;
        for (; pos < per_coord.size(); ++pos) {
            if (++choice[pos] < per_coord[pos].size()) break;
            choice[pos] = 0;
        }
        if (pos == per_coord.size()) break;
    }
    return out;
}

namespace {

std::optional<ChainElement> solve_boundary(const ModulusPair& p, const ChainElement& target, const Multidegree& deg,
                                           int pole_bound, std::size_t max_columns) {
    const std::size_t n = target.degree();
    const std::vector<Tensor> columns = tensors_in_window(p, n + 2, deg, pole_bound, max_columns);

    std::map<Tensor, std::size_t> row_index;
    for (const auto& [tensor, v] : target.terms()) row_index.emplace(tensor, row_index.size());
    std::vector<ChainElement> images;
    images.reserve(columns.size());
    for (const auto& t : columns) {
        images.push_back(hochschild_b(ChainElement::single(p, t)));
        for (const auto& [tensor, v] : images.back().terms()) row_index.emplace(tensor, row_index.size());
    }
    SparseMatrixQ m(row_index.size(), columns.size());
    for (std::size_t col = 0; col < columns.size(); ++col)
        for (const auto& [tensor, v] : images[col].terms()) m.add(row_index.at(tensor), col, v);
    VectorQ rhs(row_index.size());
    for (const auto& [tensor, v] : target.terms()) rhs[row_index.at(tensor)] = v;

    const auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    ChainElement w(p, n + 1);
    for (std::size_t col = 0; col < columns.size(); ++col)
        if ((*x)[col] != 0) w.add(columns[col], (*x)[col]);
    return w;
}

}  // namespace

ProbeResult hkr_cycle_probe(const ModulusPair& p, const ChainElement& z, int pole_bound, ProbeLimits limits) {
    if (!(z.pair() == p)) throw std::invalid_argument("hkr_cycle_probe: pair mismatch");
    if (classify_chain(z) == ChainClass::FULL_HH) throw std::invalid_argument("hkr_cycle_probe: chain is not M-HH");
    if (!hochschild_b(z).is_zero()) throw std::invalid_argument("hkr_cycle_probe: chain is not a cycle");
    if (pole_bound < 0) throw std::invalid_argument("hkr_cycle_probe: pole bound must be non-negative");

    const ChainElement target = z - hkr_eps(hkr_e(z));
    ProbeResult result;
    if (target.is_zero()) {
        result.status = ProbeStatus::Confirmed;
        result.pole_bound_used = 0;
        result.witness = ChainElement(p, z.degree() + 1);
        return result;
    }

    // b preserves multidegree, so each homogeneous component is solved separately.
    std::map<Multidegree, ChainElement> components;
    for (const auto& [tensor, v] : target.terms()) {
        auto [it, inserted] = components.try_emplace(multidegree_of(tensor), p, z.degree());
        it->second.add(tensor, v);
    }

    ChainElement witness(p, z.degree() + 1);
    int used = 0;
    for (const auto& [deg, component] : components) {
        std::optional<ChainElement> w;
        for (int bound = 0; bound <= pole_bound && !w; ++bound) {
            try {
                w = solve_boundary(p, component, deg, bound, limits.max_columns);
            } catch (const std::length_error&) {
                result.note = "search window for " + to_string(deg) + " exceeds the column limit at pole bound " +
                              std::to_string(bound);
                return result;
            }
            if (w) used = std::max(used, bound);
        }
        if (!w) {
            result.note = "no preimage within pole bound " + std::to_string(pole_bound) + " for component " +
                          to_string(deg);
            return result;
        }
        witness += *w;
    }
    if (!(hochschild_b(witness) == target)) throw std::logic_error("hkr_cycle_probe: witness failed verification");
    result.status = ProbeStatus::Confirmed;
    result.pole_bound_used = used;
    result.witness = std::move(witness);
    return result;
}

}  // namespace modhom
