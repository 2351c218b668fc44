#include "modhom/syntax.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace modhom {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = s.find(sep, start);
        out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
        if (at == std::string::npos) break;
        start = at + sep.size();
    }
    return out;
}

std::string power(const std::string& letter, std::size_t index, int e) {
    std::string out = letter + std::to_string(index + 1);
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

std::string with_coefficient(const Rational& c, const std::string& body) {
    if (c == 1) return body;
    return "(" + to_string(c) + ")*" + body;
}

template <typename Terms, typename Render>
std::string join_terms(const Terms& terms, Render render) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms) {
        if (!out.empty()) out += " + ";
        out += with_coefficient(c, render(key));
    }
    return out;
}

int parse_int(const std::string& text) {
    static const std::regex integer(R"([-+]?\d+)");
    const std::string t = trim(text);
    if (!std::regex_match(t, integer)) throw std::invalid_argument("expected an integer, got '" + text + "'");
    try {
        return std::stoi(t);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("integer out of range: '" + text + "'");
    }
}

}  // namespace

std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t j = 0; j < m.i.size(); ++j)
        if (m.i[j] != 0) out += (out.empty() ? "" : "*") + power("x", j, m.i[j]);
    for (std::size_t l = 0; l < m.k.size(); ++l)
        if (m.k[l] != 0) out += (out.empty() ? "" : "*") + power("y", l, m.k[l]);
    return out.empty() ? "1" : out;
}

std::string to_string(const FormTerm& term) {
    std::string out = term.mono.is_one() && term.degree() > 0 ? "" : to_string(term.mono);
    for (std::size_t j : term.S) out += (out.empty() ? "" : "*") + std::string("dlogx") + std::to_string(j + 1);
    for (std::size_t l : term.T) out += (out.empty() ? "" : "*") + std::string("dy") + std::to_string(l + 1);
    return out;
}

std::string to_string(const LogForm& form) {
    return join_terms(form.terms(), [](const FormTerm& t) { return to_string(t); });
}

std::string to_string(const Tensor& tensor) {
    std::string out;
    for (const auto& m : tensor) out += (out.empty() ? "" : " (x) ") + to_string(m);
    return out;
}

std::string to_string(const ChainElement& chain) {
    return join_terms(chain.terms(), [](const Tensor& t) { return to_string(t); });
}

Rational parse_rational(const std::string& text) {
    static const std::regex rational(R"([-+]?\d+(/\d+)?)");
    const std::string t = trim(text);
    if (!std::regex_match(t, rational)) throw std::invalid_argument("expected a rational number, got '" + text + "'");
    Rational q(t[0] == '+' ? t.substr(1) : t, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Monomial parse_monomial(const ModulusPair& p, const std::string& text) {
    static const std::regex letter(R"(([xy])(\d+)(?:\^([-+]?\d+))?)");
    Monomial m = p.one();
    const std::string t = trim(text);
    if (t == "1") return m;
    for (const std::string& raw : split(t, "*")) {
        const std::string piece = trim(raw);
        std::smatch match;
        if (!std::regex_match(piece, match, letter)) throw std::invalid_argument("bad monomial factor '" + piece + "'");
        const std::size_t index = std::stoul(match[2].str());
        const int e = match[3].matched ? parse_int(match[3].str()) : 1;
        const bool is_x = match[1].str() == "x";
        if (index == 0 || index > (is_x ? p.s() : p.t()))
            throw std::invalid_argument("variable index out of range in '" + piece + "'");
        (is_x ? m.i[index - 1] : m.k[index - 1]) += e;
    }
    return m;
}

ChainElement parse_chain(const ModulusPair& p, const std::string& text) {
    static const std::regex coefficient(R"(^\s*(?:\(\s*([-+]?\d+(?:/\d+)?)\s*\)|([-+]?\d+(?:/\d+)?))\s*\*(.*)$)");
    std::vector<std::pair<Rational, Tensor>> terms;
    for (const std::string& raw : split(text, "+")) {
        std::string term = trim(raw);
        if (term.empty()) throw std::invalid_argument("empty term in chain '" + text + "'");
        Rational c = 1;
        std::smatch match;
        if (std::regex_match(term, match, coefficient)) {
            c = parse_rational(match[1].matched ? match[1].str() : match[2].str());
            term = match[3].str();
        } else if (term[0] == '-') {
            c = -1;
            term = term.substr(1);
        }
        Tensor tensor;
        for (const std::string& factor : split(term, "(x)")) tensor.push_back(parse_monomial(p, factor));
        terms.emplace_back(c, std::move(tensor));
    }
    ChainElement out(p, terms.front().second.size() - 1);
    for (const auto& [c, tensor] : terms) {
        if (tensor.size() != out.degree() + 1) throw std::invalid_argument("chain terms have different degrees");
        out.add(tensor, c);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (trim(text).empty()) return out;
    for (const std::string& piece : split(text, ",")) out.push_back(parse_int(piece));
    return out;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto at = text.find("..");
    if (at == std::string::npos) {
        const long v = parse_int(text);
        return {v, v};
    }
    const long lo = parse_int(text.substr(0, at));
    const long hi = parse_int(text.substr(at + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

Multidegree parse_multidegree(const ModulusPair& p, const std::string& text) {
    const std::vector<int> flat = parse_int_list(text);
    if (flat.size() != p.s() + p.t())
        throw std::invalid_argument("multidegree needs " + std::to_string(p.s() + p.t()) + " entries, got '" + text + "'");
    Multidegree d{std::vector<int>(flat.begin(), flat.begin() + static_cast<long>(p.s())),
                  std::vector<int>(flat.begin() + static_cast<long>(p.s()), flat.end())};
    for (int k : d.dy)
        if (k < 0) throw std::invalid_argument("y-degrees must be non-negative");
    return d;
}

nlohmann::ordered_json to_json(const ModulusPair& p) {
    return nlohmann::ordered_json{{"s", p.s()}, {"t", p.t()}, {"r", p.r()}};
}

nlohmann::ordered_json to_json(const Multidegree& d) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int v : d.dx) out.push_back(v);
    for (int v : d.dy) out.push_back(v);
    return out;
}

nlohmann::ordered_json to_json(const DimensionReport& report) {
    nlohmann::ordered_json out;
    out["pair"] = to_json(report.pair);
    out["deg"] = to_json(report.deg);
    out["variant"] = report.variant;
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (const auto& [n, v] : report.dims) dims[std::to_string(n)] = v;
    out["dims"] = dims;
    if (!report.oracle.empty()) {
        nlohmann::ordered_json oracle = nlohmann::ordered_json::object();
        for (const auto& [n, v] : report.oracle) oracle[std::to_string(n)] = v;
        out["oracle"] = oracle;
        out["match"] = report.oracle == report.dims;
    }
    return out;
}

nlohmann::ordered_json to_json(const std::vector<DimensionReport>& reports) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return out;
}

std::string to_csv(const std::vector<DimensionReport>& reports) {
    bool with_oracle = false;
    for (const auto& r : reports) with_oracle = with_oracle || !r.oracle.empty();
    std::ostringstream out;
    out << "s,t,r,deg,variant,n,dim" << (with_oracle ? ",oracle,match" : "") << "\n";
    for (const auto& r : reports) {
        std::string rs, ds;
        for (int v : r.pair.r()) rs += (rs.empty() ? "" : ";") + std::to_string(v);
        for (const auto& v : to_json(r.deg)) ds += (ds.empty() ? "" : ";") + v.dump();
        for (const auto& [n, v] : r.dims) {
            out << r.pair.s() << ',' << r.pair.t() << ',' << rs << ',' << ds << ',' << r.variant << ',' << n << ','
                << v;
            if (with_oracle) {
                auto it = r.oracle.find(n);
                if (it == r.oracle.end()) out << ",,";
                else out << ',' << it->second << ',' << (it->second == v ? "true" : "false");
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace modhom
