#include "modhom/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace modhom {

Multidegree multidegree_of(const FormTerm& term) {
    Multidegree d{term.mono.i, term.mono.k};
    for (int l : term.T) d.dy[l] += 1;
    return d;
}

const char* to_string(FormClass c) {
    switch (c) {
        case FormClass::P_OMEGA: return "P_OMEGA";
        case FormClass::M_OMEGA: return "M_OMEGA";
        case FormClass::FULL: return "FULL";
    }
    return "?";
}

LogForm LogForm::function(const ModulusPair& pair, const Monomial& m, const Rational& c) {
    LogForm out(pair, 0);
    out.add(FormTerm{m, {}, {}}, c);
    return out;
}

LogForm LogForm::single(const ModulusPair& pair, FormTerm term, const Rational& c) {
    LogForm out(pair, term.degree());
    out.add(term, c);
    return out;
}

LogForm LogForm::dlog_x(const ModulusPair& pair, std::size_t j) {
    return single(pair, FormTerm{pair.one(), {static_cast<int>(j)}, {}});
}

LogForm LogForm::dy(const ModulusPair& pair, std::size_t l) {
    return single(pair, FormTerm{pair.one(), {}, {static_cast<int>(l)}});
}

namespace {

bool strictly_ascending(const std::vector<int>& v, std::size_t bound) {
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] < 0 || static_cast<std::size_t>(v[a]) >= bound) return false;
        if (a > 0 && v[a - 1] >= v[a]) return false;
    }
    return true;
}

}  // namespace

void LogForm::add(const FormTerm& term, const Rational& c) {
    pair_.check(term.mono);
    if (term.degree() != degree_) throw std::invalid_argument("LogForm::add: term has the wrong degree");
    if (!in_localization(pair_, term.mono))
        throw std::invalid_argument("LogForm::add: negative y-exponent");
    if (!strictly_ascending(term.S, pair_.s()) || !strictly_ascending(term.T, pair_.t()))
        throw std::invalid_argument("LogForm::add: factor indices must be ascending and in range");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(term, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LogForm::check_compatible(const LogForm& other) const {
    if (!(pair_ == other.pair_)) throw std::invalid_argument("LogForm: pair mismatch");
    if (degree_ != other.degree_) throw std::invalid_argument("LogForm: degree mismatch");
}

LogForm& LogForm::operator+=(const LogForm& other) {
    check_compatible(other);
    for (const auto& [term, c] : other.terms_) add(term, c);
    return *this;
}

LogForm& LogForm::operator-=(const LogForm& other) {
    check_compatible(other);
    for (const auto& [term, c] : other.terms_) add(term, -c);
    return *this;
}

LogForm LogForm::operator+(const LogForm& other) const {
    LogForm out = *this;
    out += other;
    return out;
}

LogForm LogForm::operator-(const LogForm& other) const {
    LogForm out = *this;
    out -= other;
    return out;
}

LogForm LogForm::operator*(const Rational& c) const {
    LogForm out(pair_, degree_);
    if (c == 0) return out;
    for (const auto& [term, v] : terms_) out.terms_.emplace(term, v * c);
    return out;
}

LogForm LogForm::times(const Monomial& m) const {
    LogForm out(pair_, degree_);
    for (const auto& [term, v] : terms_) {
        FormTerm shifted = term;
        shifted.mono = term.mono * m;
        out.add(shifted, v);
    }
    return out;
}

bool term_in_class(const ModulusPair& p, const FormTerm& term, FormClass c) {
    switch (c) {
        case FormClass::P_OMEGA: return x_exponents_at_least_zero(term.mono.i);
        case FormClass::M_OMEGA: return x_exponents_in_MO(p, term.mono.i);
        case FormClass::FULL: return true;
    }
    return false;
}

FormClass classify(const LogForm& form) {
    FormClass out = FormClass::P_OMEGA;
    for (const auto& [term, c] : form.terms()) {
        if (term_in_class(form.pair(), term, FormClass::P_OMEGA)) continue;
        if (term_in_class(form.pair(), term, FormClass::M_OMEGA)) {
            out = FormClass::M_OMEGA;
            continue;
        }
        return FormClass::FULL;
    }
    return out;
}

namespace {

// Letters are keyed x_j -> j, y_l -> s + l; the canonical order is ascending key.
// Returns 0 when a letter repeats, otherwise the sign of the sorting permutation.
int merge_sign(const FormTerm& a, const FormTerm& b, std::size_t s, FormTerm& out) {
    std::vector<int> keys;
    keys.reserve(a.degree() + b.degree());
    for (int j : a.S) keys.push_back(j);
    for (int l : a.T) keys.push_back(static_cast<int>(s) + l);
    for (int j : b.S) keys.push_back(j);
    for (int l : b.T) keys.push_back(static_cast<int>(s) + l);

    int inversions = 0;
    for (std::size_t u = 0; u < keys.size(); ++u)
        for (std::size_t v = u + 1; v < keys.size(); ++v) {
            if (keys[u] == keys[v]) return 0;
            if (keys[u] > keys[v]) ++inversions;
        }
    std::sort(keys.begin(), keys.end());
    out.S.clear();
    out.T.clear();
    for (int key : keys) {
        if (key < static_cast<int>(s)) out.S.push_back(key);
        else out.T.push_back(key - static_cast<int>(s));
    }
    out.mono = a.mono * b.mono;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

LogForm wedge(const LogForm& a, const LogForm& b) {
    if (!(a.pair() == b.pair())) throw std::invalid_argument("wedge: pair mismatch");
    LogForm out(a.pair(), a.degree() + b.degree());
    FormTerm merged;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            const int sign = merge_sign(ta, tb, a.pair().s(), merged);
            if (sign == 0) continue;
            out.add(merged, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    return out;
}

LogForm d_monomial(const ModulusPair& p, const Monomial& m) {
    LogForm out(p, 1);
    for (std::size_t j = 0; j < p.s(); ++j)
        if (m.i[j] != 0) out.add(FormTerm{m, {static_cast<int>(j)}, {}}, Rational(m.i[j]));
    for (std::size_t l = 0; l < p.t(); ++l)
        if (m.k[l] != 0) {
            Monomial lowered = m;
            lowered.k[l] -= 1;
            out.add(FormTerm{lowered, {}, {static_cast<int>(l)}}, Rational(m.k[l]));
        }
    return out;
}

LogForm de_rham_d(const LogForm& form) {
    const ModulusPair& p = form.pair();
    LogForm out(p, form.degree() + 1);
    // dlog x_j and dy_l are closed, so d(c m beta) = c dm ^ beta.
    for (const auto& [term, c] : form.terms()) {
        const LogForm dm = d_monomial(p, term.mono);
        const LogForm beta = LogForm::single(p, FormTerm{p.one(), term.S, term.T}, c);
        out += wedge(dm, beta);
    }
    return out;
}

namespace {

void subsets_of_size(std::size_t n, std::size_t size, std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    auto rec = [&](auto&& self, int start) -> void {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (int v = start; v < static_cast<int>(n); ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<FormTerm> basis_of(const ModulusPair& p, FormClass cls, std::size_t q, const Multidegree& deg) {
    if (cls == FormClass::FULL) throw std::invalid_argument("basis_of: the FULL class has no finite graded basis");
    p.check(deg);
    for (int e : deg.dy)
        if (e < 0) throw std::invalid_argument("basis_of: negative y-degree");

    std::vector<FormTerm> out;
    FormTerm probe{Monomial{deg.dx, deg.dy}, {}, {}};
    if (!term_in_class(p, probe, cls)) return out;
    if (q > p.s() + p.t()) return out;

    for (std::size_t ny = 0; ny <= std::min(q, p.t()); ++ny) {
        const std::size_t nx = q - ny;
        if (nx > p.s()) continue;
        std::vector<std::vector<int>> xs, ys;
        subsets_of_size(p.s(), nx, xs);
        subsets_of_size(p.t(), ny, ys);
        for (const auto& T : ys) {
            Monomial m{deg.dx, deg.dy};
            bool ok = true;
            for (int l : T)
                if (--m.k[l] < 0) ok = false;
            if (!ok) continue;
            for (const auto& S : xs) out.push_back(FormTerm{m, S, T});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modhom
