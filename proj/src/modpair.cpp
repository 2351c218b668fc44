#include "modhom/modpair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modhom {

bool Monomial::is_one() const {
    return std::all_of(i.begin(), i.end(), [](int e) { return e == 0; }) &&
           std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (i.size() != other.i.size() || k.size() != other.k.size())
        throw std::invalid_argument("Monomial::operator*: length mismatch");
    Monomial out = *this;
    for (std::size_t j = 0; j < i.size(); ++j) out.i[j] += other.i[j];
    for (std::size_t l = 0; l < k.size(); ++l) out.k[l] += other.k[l];
    return out;
}

ModulusPair::ModulusPair(std::size_t s, std::size_t t, std::vector<int> r)
    : s_(s), t_(t), r_(std::move(r)) {
    if (r_.size() != s_) throw std::invalid_argument("ModulusPair: expected one multiplicity per modulus variable");
    for (int rj : r_)
        if (rj < 1) throw std::invalid_argument("ModulusPair: multiplicities must be positive");
}

Monomial ModulusPair::x(std::size_t j, int power) const {
    if (j >= s_) throw std::out_of_range("ModulusPair::x: index out of range");
    Monomial m = one();
    m.i[j] = power;
    return m;
}

Monomial ModulusPair::y(std::size_t l, int power) const {
    if (l >= t_) throw std::out_of_range("ModulusPair::y: index out of range");
    Monomial m = one();
    m.k[l] = power;
    return m;
}

void ModulusPair::check(const Monomial& m) const {
    if (m.i.size() != s_ || m.k.size() != t_)
        throw std::invalid_argument("monomial does not match the pair's variable counts");
}

void ModulusPair::check(const Multidegree& d) const {
    if (d.dx.size() != s_ || d.dy.size() != t_)
        throw std::invalid_argument("multidegree does not match the pair's variable counts");
}

bool ModulusPair::reduced() const {
    return std::all_of(r_.begin(), r_.end(), [](int rj) { return rj == 1; });
}

bool in_localization(const ModulusPair& p, const Monomial& m) {
    p.check(m);
    return std::all_of(m.k.begin(), m.k.end(), [](int e) { return e >= 0; });
}

bool in_ring(const ModulusPair& p, const Monomial& m) {
    return in_localization(p, m) && x_exponents_at_least_zero(m.i);
}

bool is_unit_monomial(const ModulusPair& p, const Monomial& m) {
    p.check(m);
    return std::all_of(m.k.begin(), m.k.end(), [](int e) { return e == 0; });
}

bool in_MO(const ModulusPair& p, const Monomial& m) {
    return in_localization(p, m) && x_exponents_in_MO(p, m.i);
}

bool x_exponents_at_least_zero(const std::vector<int>& i) {
    return std::all_of(i.begin(), i.end(), [](int e) { return e >= 0; });
}

bool x_exponents_in_MO(const ModulusPair& p, const std::vector<int>& i) {
    for (std::size_t j = 0; j < i.size(); ++j)
        if (i[j] < p.mo_bound(j)) return false;
    return true;
}

Multidegree multidegree_of(const Monomial& m) { return Multidegree{m.i, m.k}; }

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
    if (a.dx.size() != b.dx.size() || a.dy.size() != b.dy.size())
        throw std::invalid_argument("Multidegree::operator+: length mismatch");
    Multidegree out = a;
    for (std::size_t j = 0; j < a.dx.size(); ++j) out.dx[j] += b.dx[j];
    for (std::size_t l = 0; l < a.dy.size(); ++l) out.dy[l] += b.dy[l];
    return out;
}

std::string to_string(const Multidegree& d) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < d.dx.size(); ++j) os << (j ? "," : "") << d.dx[j];
    os << ';';
    for (std::size_t l = 0; l < d.dy.size(); ++l) os << (l ? "," : "") << d.dy[l];
    os << ')';
    return os.str();
}

}  // namespace modhom
