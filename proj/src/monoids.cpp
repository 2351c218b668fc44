#include "modhom/monoids.hpp"

#include <regex>
#include <stdexcept>

namespace modhom {

namespace {

void require_length(const LatticeVector& v, std::size_t n, const char* where) {
    if (v.size() != n) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

BigInt mod_nonneg(const BigInt& a, const BigInt& d) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

LatticeVector plus(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

LatticeVector minus(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

}  // namespace

bool FgAbMonoid::contains(const LatticeVector& v) const {
    require_length(v, rank(), "FgAbMonoid::contains");
    for (std::size_t i = 0; i < a; ++i)
        if (v[i] < 0) return false;
    return true;
}

FgAbMonoid parse_monoid(const std::string& text) {
    if (text == "0") return {};
    static const std::regex term(R"(\s*([NZ])(?:\^(\d+))?\s*)");
    FgAbMonoid m;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t plus_at = text.find('+', start);
        const std::string piece = text.substr(start, plus_at == std::string::npos ? std::string::npos : plus_at - start);
        std::smatch match;
        if (!std::regex_match(piece, match, term)) throw std::invalid_argument("parse_monoid: bad summand '" + piece + "'");
        const std::size_t count = match[2].matched ? std::stoul(match[2].str()) : 1;
        (match[1].str() == "N" ? m.a : m.b) += count;
        if (plus_at == std::string::npos) break;
        start = plus_at + 1;
    }
    return m;
}

std::string to_string(const FgAbMonoid& m) {
    if (m.rank() == 0) return "0";
    std::string out;
    if (m.a > 0) out += "N^" + std::to_string(m.a);
    if (m.b > 0) out += (out.empty() ? "" : "+") + std::string("Z^") + std::to_string(m.b);
    return out;
}

FgAbMonoid group_completion(const FgAbMonoid& m) { return FgAbMonoid{0, m.rank()}; }

MonoidMap::MonoidMap(FgAbMonoid source, FgAbMonoid target, IntMatrix matrix)
    : source_(source), target_(target), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
        throw std::invalid_argument("MonoidMap: matrix shape does not match the monoids");
    for (std::size_t c = 0; c < source_.a; ++c)
        for (std::size_t r = 0; r < target_.a; ++r)
            if (matrix_(r, c) < 0)
                throw std::invalid_argument("MonoidMap: image of an N-generator is not in the target");
    for (std::size_t c = source_.a; c < source_.rank(); ++c)
        for (std::size_t r = 0; r < target_.a; ++r)
            if (matrix_(r, c) != 0)
                throw std::invalid_argument("MonoidMap: image of a Z-generator is not a unit of the target");
}

MonoidMap MonoidMap::zero(const FgAbMonoid& m) { return MonoidMap(FgAbMonoid{}, m, IntMatrix(m.rank(), 0)); }

LatticeVector MonoidMap::apply(const LatticeVector& v) const {
    require_length(v, source_.rank(), "MonoidMap::apply");
    return matrix_.apply(v);
}

bool rep_membership(const FgAbMonoid& m, const std::vector<LatticeVector>& g) {
    if (g.empty()) throw std::invalid_argument("rep_membership: empty tuple");
    LatticeVector sum(m.rank(), 0);
    for (const auto& v : g) {
        require_length(v, m.rank(), "rep_membership");
        sum = plus(sum, v);
    }
    return m.contains(sum);
}

LatticeQuotient::LatticeQuotient(const IntMatrix& relations) {
    const std::size_t n = relations.rows();
    moduli_.assign(n, 0);
    if (relations.cols() == 0) {
        u_ = IntMatrix::identity(n);
        u_inv_ = u_;
        return;
    }
    const SmithForm snf = smith_normal_form(relations);
    u_ = snf.U;
    u_inv_ = unimodular_inverse(snf.U);
    for (std::size_t i = 0; i < std::min(n, relations.cols()); ++i) moduli_[i] = snf.D(i, i);
}

std::vector<BigInt> LatticeQuotient::torsion() const {
    std::vector<BigInt> out;
    for (const auto& d : moduli_)
        if (d > 1) out.push_back(d);
    return out;
}

std::size_t LatticeQuotient::free_rank() const {
    std::size_t n = 0;
    for (const auto& d : moduli_)
        if (d == 0) ++n;
    return n;
}

LatticeVector LatticeQuotient::reduce(const LatticeVector& g) const {
    require_length(g, ambient_rank(), "LatticeQuotient::reduce");
    LatticeVector y = u_.apply(g);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (moduli_[i] != 0) y[i] = mod_nonneg(y[i], moduli_[i]);
    return y;
}

LatticeVector LatticeQuotient::lift(const LatticeVector& coords) const {
    require_length(coords, ambient_rank(), "LatticeQuotient::lift");
    return u_inv_.apply(coords);
}

LatticeVector LatticeQuotient::add(const LatticeVector& a, const LatticeVector& b) const {
    return reduce(lift(plus(a, b)));
}

bool LatticeQuotient::in_image(const LatticeVector& g) const {
    const LatticeVector y = reduce(g);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0) return false;
    return true;
}

RepletionResult::RepletionResult(MonoidMap map, std::size_t n)
    : map_(std::move(map)), n_(n), quotient_(map_.matrix()) {}

RepletionResult repletion_iso(const MonoidMap& p_to_m, std::size_t n) {
    if (n == 0) throw std::invalid_argument("repletion_iso: n must be positive");
    return RepletionResult(p_to_m, n);
}

bool RepletionResult::contains(const std::vector<LatticeVector>& g) const {
    if (g.size() != n_) throw std::invalid_argument("RepletionResult: tuple length mismatch");
    return rep_membership(map_.target(), g);
}

bool RepletionResult::equivalent(const std::vector<LatticeVector>& g, const std::vector<LatticeVector>& h) const {
    if (g.size() != n_ || h.size() != n_) throw std::invalid_argument("RepletionResult: tuple length mismatch");
    const std::size_t rank = map_.target().rank();
    LatticeVector total(rank, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        require_length(g[i], rank, "RepletionResult::equivalent");
        require_length(h[i], rank, "RepletionResult::equivalent");
        const LatticeVector diff = minus(g[i], h[i]);
        if (!quotient_.in_image(diff)) return false;
        total = plus(total, diff);
    }
    for (const auto& v : total)
        if (v != 0) return false;
    return true;
}

SplitElement RepletionResult::forward(const std::vector<LatticeVector>& g) const {
    if (!contains(g)) throw std::invalid_argument("RepletionResult::forward: tuple is not in the repletion");
    SplitElement out{LatticeVector(map_.target().rank(), 0), {}};
    for (const auto& v : g) out.m = plus(out.m, v);
    for (std::size_t i = 1; i < n_; ++i) out.quotient.push_back(quotient_.reduce(g[i]));
    return out;
}

std::vector<LatticeVector> RepletionResult::backward(const SplitElement& x) const {
    if (x.quotient.size() + 1 != n_) throw std::invalid_argument("RepletionResult::backward: wrong number of quotient entries");
    if (!map_.target().contains(x.m)) throw std::invalid_argument("RepletionResult::backward: first entry is not in M");
    std::vector<LatticeVector> out(n_);
    out[0] = x.m;
    for (std::size_t i = 1; i < n_; ++i) {
        out[i] = quotient_.lift(quotient_.reduce(quotient_.lift(x.quotient[i - 1])));
        out[0] = minus(out[0], out[i]);
    }
    return out;
}

SplitElement RepletionResult::add(const SplitElement& x, const SplitElement& y) const {
    if (x.quotient.size() != y.quotient.size()) throw std::invalid_argument("RepletionResult::add: shape mismatch");
    SplitElement out{plus(x.m, y.m), {}};
    for (std::size_t i = 0; i < x.quotient.size(); ++i) out.quotient.push_back(quotient_.add(x.quotient[i], y.quotient[i]));
    return out;
}

std::vector<LatticeVector> project_to_nonunit_part(const FgAbMonoid& m, const std::vector<LatticeVector>& g) {
    std::vector<LatticeVector> out;
    for (const auto& v : g) {
        require_length(v, m.rank(), "project_to_nonunit_part");
        out.emplace_back(v.begin(), v.begin() + static_cast<long>(m.a));
    }
    return out;
}

bool replete_bar_predicate(const ModulusPair& p, std::size_t n, const Tensor& tensor) {
    if (tensor.size() != n + 1) throw std::invalid_argument("replete_bar_predicate: tensor must have n + 1 factors");
    const FgAbMonoid m{p.s(), 0};
    std::vector<LatticeVector> g;
    for (const auto& factor : tensor) {
        p.check(factor);
        for (int k : factor.k)
            if (k < 0) return false;
        g.emplace_back(factor.i.begin(), factor.i.end());
    }
    return rep_membership(m, g);
}

}  // namespace modhom
