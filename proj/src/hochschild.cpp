#include "modhom/hochschild.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modhom {

const char* to_string(ChainClass c) {
    switch (c) {
        case ChainClass::P_HH: return "P_HH";
        case ChainClass::M_HH: return "M_HH";
        case ChainClass::FULL_HH: return "FULL_HH";
    }
    return "?";
}

Multidegree multidegree_of(const Tensor& tensor) {
    if (tensor.empty()) throw std::invalid_argument("multidegree_of: empty tensor");
    Multidegree d{tensor.front().i, tensor.front().k};
    for (std::size_t a = 1; a < tensor.size(); ++a) {
        for (std::size_t j = 0; j < d.dx.size(); ++j) d.dx[j] += tensor[a].i[j];
        for (std::size_t l = 0; l < d.dy.size(); ++l) d.dy[l] += tensor[a].k[l];
    }
    return d;
}

ChainElement ChainElement::single(const ModulusPair& pair, Tensor tensor, const Rational& c) {
    if (tensor.empty()) throw std::invalid_argument("ChainElement::single: empty tensor");
    ChainElement out(pair, tensor.size() - 1);
    out.add(tensor, c);
    return out;
}

void ChainElement::add(const Tensor& tensor, const Rational& c) {
    if (tensor.size() != degree_ + 1) throw std::invalid_argument("ChainElement::add: wrong number of factors");
    for (const auto& m : tensor)
        if (!in_localization(pair_, m)) throw std::invalid_argument("ChainElement::add: factor outside A[1/f]");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(tensor, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ChainElement::check_compatible(const ChainElement& other) const {
    if (!(pair_ == other.pair_)) throw std::invalid_argument("ChainElement: pair mismatch");
    if (degree_ != other.degree_) throw std::invalid_argument("ChainElement: degree mismatch");
}

ChainElement& ChainElement::operator+=(const ChainElement& other) {
    check_compatible(other);
    for (const auto& [tensor, c] : other.terms_) add(tensor, c);
    return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& other) {
    check_compatible(other);
    for (const auto& [tensor, c] : other.terms_) add(tensor, -c);
    return *this;
}

ChainElement ChainElement::operator+(const ChainElement& other) const {
    ChainElement out = *this;
    out += other;
    return out;
}

ChainElement ChainElement::operator-(const ChainElement& other) const {
    ChainElement out = *this;
    out -= other;
    return out;
}

ChainElement ChainElement::operator*(const Rational& c) const {
    ChainElement out(pair_, degree_);
    if (c == 0) return out;
    for (const auto& [tensor, v] : terms_) out.terms_.emplace(tensor, v * c);
    return out;
}

bool tensor_in_class(const ModulusPair& p, const Tensor& tensor, ChainClass c) {
    if (c == ChainClass::FULL_HH) return true;
    const Multidegree d = multidegree_of(tensor);
    return c == ChainClass::P_HH ? x_exponents_at_least_zero(d.dx) : x_exponents_in_MO(p, d.dx);
}

ChainClass classify_chain(const ChainElement& c) {
    ChainClass out = ChainClass::P_HH;
    for (const auto& [tensor, v] : c.terms()) {
        if (tensor_in_class(c.pair(), tensor, ChainClass::P_HH)) continue;
        if (tensor_in_class(c.pair(), tensor, ChainClass::M_HH)) {
            out = ChainClass::M_HH;
            continue;
        }
        return ChainClass::FULL_HH;
    }
    return out;
}

namespace {

// Applies a tensor -> tensor map termwise with a fixed sign.
template <typename F>
ChainElement map_terms(const ChainElement& c, std::size_t degree, F&& f) {
    ChainElement out(c.pair(), degree);
    for (const auto& [tensor, v] : c.terms()) out.add(f(tensor), v);
    return out;
}

Tensor face_tensor(const Tensor& t, std::size_t idx) {
    const std::size_t n = t.size() - 1;
    Tensor out;
    out.reserve(n);
    if (idx < n) {
        for (std::size_t a = 0; a < idx; ++a) out.push_back(t[a]);
        out.push_back(t[idx] * t[idx + 1]);
        for (std::size_t a = idx + 2; a <= n; ++a) out.push_back(t[a]);
    } else {
        out.push_back(t[n] * t[0]);
        for (std::size_t a = 1; a < n; ++a) out.push_back(t[a]);
    }
    return out;
}

Tensor rotate_tensor(const Tensor& t) {
    Tensor out;
    out.reserve(t.size());
    out.push_back(t.back());
    for (std::size_t a = 0; a + 1 < t.size(); ++a) out.push_back(t[a]);
    return out;
}

}  // namespace

ChainElement face(const ChainElement& c, std::size_t idx) {
    const std::size_t n = c.degree();
    if (n == 0 || idx > n) throw std::out_of_range("face: index out of range");
    return map_terms(c, n - 1, [idx](const Tensor& t) { return face_tensor(t, idx); });
}

ChainElement degeneracy(const ChainElement& c, std::size_t idx) {
    const std::size_t n = c.degree();
    if (idx > n) throw std::out_of_range("degeneracy: index out of range");
    const Monomial one = c.pair().one();
    return map_terms(c, n + 1, [idx, &one](const Tensor& t) {
        Tensor out = t;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(idx) + 1, one);
        return out;
    });
}

ChainElement hochschild_b(const ChainElement& c) {
    const std::size_t n = c.degree();
    if (n == 0) return ChainElement(c.pair(), 0);
    ChainElement out(c.pair(), n - 1);
    for (const auto& [tensor, v] : c.terms())
        for (std::size_t i = 0; i <= n; ++i) out.add(face_tensor(tensor, i), i % 2 == 0 ? v : Rational(-v));
    return out;
}

ChainElement cyclic_t(const ChainElement& c) {
    return map_terms(c, c.degree(), rotate_tensor);
}

ChainElement connes_B(const ChainElement& c) {
    const std::size_t n = c.degree();
    // N = sum_{i=0}^n (-1)^{ni} t_n^i
    ChainElement norm(c.pair(), n);
    ChainElement power = c;
    for (std::size_t i = 0; i <= n; ++i) {
        if ((n * i) % 2 == 0) norm += power;
        else norm -= power;
        power = cyclic_t(power);
    }
    // t_{n+1} s_n: append the unit, then rotate it to the front.
    const ChainElement extra = cyclic_t(degeneracy(norm, n));
    // (1 - (-1)^{n+1} t_{n+1})
    const ChainElement rotated = cyclic_t(extra);
    return (n + 1) % 2 == 0 ? extra - rotated : extra + rotated;
}

ChainElement shuffle(const ChainElement& a, const ChainElement& b) {
    if (!(a.pair() == b.pair())) throw std::invalid_argument("shuffle: pair mismatch");
    const std::size_t p = a.degree();
    const std::size_t q = b.degree();
    ChainElement out(a.pair(), p + q);

    // Enumerate (p, q)-shuffles as the set of positions taken by a's letters.
    std::vector<bool> from_a(p + q, false);
    std::fill(from_a.begin(), from_a.begin() + static_cast<std::ptrdiff_t>(p), true);
    std::vector<std::vector<bool>> shuffles;
    std::vector<bool> pattern(from_a.begin(), from_a.end());
    std::sort(pattern.begin(), pattern.end());
    do {
        shuffles.push_back(pattern);
    } while (std::next_permutation(pattern.begin(), pattern.end()));

    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            for (const auto& shape : shuffles) {
                Tensor t;
                t.reserve(p + q + 1);
                t.push_back(ta[0] * tb[0]);
                std::size_t ia = 1, ib = 1;
                int inversions = 0;
                std::size_t a_remaining = p;
                for (bool take_a : shape) {
                    if (take_a) {
                        t.push_back(ta[ia++]);
                        --a_remaining;
                    } else {
                        t.push_back(tb[ib++]);
                        inversions += static_cast<int>(a_remaining);
                    }
                }
                const Rational coeff = ca * cb;
                out.add(t, inversions % 2 == 0 ? coeff : Rational(-coeff));
            }
    return out;
}

LogForm hkr_e(const ChainElement& c) {
    const ModulusPair& p = c.pair();
    const std::size_t n = c.degree();
    LogForm out(p, n);
    Rational inv_factorial = 1;
    for (std::size_t a = 2; a <= n; ++a) inv_factorial /= static_cast<long>(a);
    for (const auto& [tensor, v] : c.terms()) {
        LogForm acc = LogForm::function(p, tensor[0], v * inv_factorial);
        for (std::size_t a = 1; a <= n && !acc.is_zero(); ++a) acc = wedge(acc, d_monomial(p, tensor[a]));
        if (acc.is_zero()) continue;
        out += acc;
    }
    return out;
}

ChainElement hkr_eps_unchecked(const LogForm& form) {
    const ModulusPair& p = form.pair();
    const std::size_t q = form.degree();
    ChainElement out(p, q);
    for (const auto& [term, c] : form.terms()) {
        Tensor letters;
        Monomial carrier = term.mono;
        for (int j : term.S) {
            letters.push_back(p.x(static_cast<std::size_t>(j)));
            carrier.i[j] -= 1;
        }
        for (int l : term.T) letters.push_back(p.y(static_cast<std::size_t>(l)));

        std::vector<std::size_t> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (std::size_t u = 0; u < q; ++u)
                for (std::size_t v = u + 1; v < q; ++v)
                    if (perm[u] > perm[v]) ++inversions;
            Tensor t;
            t.reserve(q + 1);
            t.push_back(carrier);
            for (std::size_t idx : perm) t.push_back(letters[idx]);
            out.add(t, inversions % 2 == 0 ? c : Rational(-c));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

ChainElement hkr_eps(const LogForm& form) {
    if (classify(form) == FormClass::FULL) throw std::invalid_argument("hkr_eps: form is not in M-Omega");
    return hkr_eps_unchecked(form);
}

namespace {

// Letters whose product is m, each x_j^{+-1} or y_l.
std::vector<Monomial> letters_of(const ModulusPair& p, const Monomial& m) {
    std::vector<Monomial> out;
    for (std::size_t j = 0; j < p.s(); ++j)
        for (int e = 0; e < std::abs(m.i[j]); ++e) out.push_back(p.x(j, m.i[j] > 0 ? 1 : -1));
    for (std::size_t l = 0; l < p.t(); ++l)
        for (int e = 0; e < m.k[l]; ++e) out.push_back(p.y(l));
    return out;
}

// w with b(w) = m0 (x) m1 - eps(e(m0 (x) m1)), accumulated into `out` scaled by c.
void homotopy_term(const ModulusPair& p, const Monomial& m0, const Monomial& m1, const Rational& c,
                   ChainElement& out) {
    if (m1.is_one()) {
        // b(m0 (x) 1 (x) 1) = m0 (x) 1 and e(m0 (x) 1) = 0.
        out.add(Tensor{m0, p.one(), p.one()}, c);
        return;
    }
    const std::vector<Monomial> letters = letters_of(p, m1);
    if (letters.size() == 1) {
        const Monomial& u = letters.front();
        const bool positive = std::all_of(u.i.begin(), u.i.end(), [](int e) { return e >= 0; });
        if (positive) return;  // eps(e(m0 (x) u)) == m0 (x) u for u = x_j or y_l.
        // u = x_j^{-1}: from m0 (x) 1 = m0 x_j (x) x_j^{-1} + m0 x_j^{-1} (x) x_j - b(m0 (x) x_j (x) x_j^{-1})
        // with m0' = m0 x_j: H(m0', x_j^{-1}) = H(m0' x_j^{-1}, 1) + m0' x_j^{-1} (x) x_j (x) x_j^{-1}.
        Monomial xj = u;
        for (int& e : xj.i) e = -e;
        const Monomial base = m0 * u;
        homotopy_term(p, base, p.one(), c, out);
        out.add(Tensor{base, xj, u}, c);
        return;
    }
    // m1 = u v: H(m0, uv) = H(m0 u, v) + H(m0 v, u) - m0 (x) u (x) v.
    const Monomial& u = letters.front();
    Monomial v = p.one();
    for (std::size_t a = 1; a < letters.size(); ++a) v = v * letters[a];
    homotopy_term(p, m0 * u, v, c, out);
    homotopy_term(p, m0 * v, u, c, out);
    out.add(Tensor{m0, u, v}, -c);
}

}  // namespace

ChainElement degree_one_homotopy(const ChainElement& z) {
    if (z.degree() != 1) throw std::invalid_argument("degree_one_homotopy: chain must have degree 1");
    ChainElement out(z.pair(), 2);
    for (const auto& [tensor, c] : z.terms()) homotopy_term(z.pair(), tensor[0], tensor[1], c, out);
    return out;
}

}  // namespace modhom
