#include "modhom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "modhom/homology.hpp"
#include "modhom/monoids.hpp"
#include "modhom/syntax.hpp"

namespace modhom {

void SuiteConfig::validate() const {
    if (samples == 0) throw std::invalid_argument("samples must be positive");
    if (max_r < 1) throw std::invalid_argument("max_r must be at least 1");
    if (exp_lo > exp_hi) throw std::invalid_argument("exponent window is empty");
    if (deg_lo > deg_hi || ydeg_hi < 0) throw std::invalid_argument("multidegree window is empty");
    if (cyclic_n_hi < 0) throw std::invalid_argument("cyclic degree bound must be non-negative");
    if (pole_bound < 0) throw std::invalid_argument("pole bound must be non-negative");
}

nlohmann::ordered_json to_json(const SuiteReport& report, bool with_time) {
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    out["seed"] = report.seed;
    out["cases"] = report.cases;
    out["checks"] = report.checks;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"index", f.index},
                            {"seed", f.seed},
                            {"check", f.check},
                            {"pair", f.pair},
                            {"input", f.input},
                            {"detail", f.detail}});
    out["failures"] = failures;
    out["passed"] = report.passed();
    if (with_time) out["wall_seconds"] = report.wall_seconds;
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "closure",    "hkr_roundtrip", "derham",
                                                "cyclic_oracle", "repletion", "probe"};
    return names;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t z = root ^ (index * 0x9e3779b97f4a7c15ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng sample_rng(std::uint64_t root, std::size_t index) { return Rng(derive_seed(root, index)); }

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int class_bound(const ModulusPair& p, std::size_t j, bool p_class) { return p_class ? 0 : p.mo_bound(j); }

std::string describe(const ModulusPair& p) {
    std::string r;
    for (int v : p.r()) r += (r.empty() ? "" : ",") + std::to_string(v);
    return "s=" + std::to_string(p.s()) + " t=" + std::to_string(p.t()) + " r=(" + r + ")";
}

}  // namespace

ModulusPair generate_pair(Rng& rng, const SuiteConfig& cfg) {
    const std::size_t s = uniform_size(rng, 0, cfg.max_s);
    const std::size_t t = uniform_size(rng, 0, cfg.max_t);
    std::vector<int> r(s);
    for (auto& v : r) v = uniform(rng, 1, cfg.max_r);
    return ModulusPair(s, t, r);
}

Rational generate_coefficient(Rng& rng) {
    int num = 0;
    while (num == 0) num = uniform(rng, -3, 3);
    Rational q(num, uniform(rng, 1, 3));
    q.canonicalize();
    return q;
}

namespace {

constexpr std::size_t kEnumerationLimit = 4096;

std::vector<Tensor> enumerate_class(const ModulusPair& p, std::size_t factors, int xlo, int xhi, int ylo, int yhi,
                                    ChainClass cls) {
    const std::size_t slots = factors * (p.s() + p.t());
    std::vector<int> e(slots);
    for (std::size_t idx = 0; idx < slots; ++idx) e[idx] = idx % (p.s() + p.t()) < p.s() ? xlo : ylo;
    std::vector<Tensor> out;
    while (true) {
        Tensor t(factors, p.one());
        for (std::size_t f = 0; f < factors; ++f) {
            for (std::size_t j = 0; j < p.s(); ++j) t[f].i[j] = e[f * (p.s() + p.t()) + j];
            for (std::size_t l = 0; l < p.t(); ++l) t[f].k[l] = e[f * (p.s() + p.t()) + p.s() + l];
        }
        if (tensor_in_class(p, t, cls)) out.push_back(std::move(t));
        std::size_t pos = 0;
        for (; pos < slots; ++pos) {
            const bool is_x = pos % (p.s() + p.t()) < p.s();
            if (e[pos] < (is_x ? xhi : yhi)) {
                ++e[pos];
                break;
            }
            e[pos] = is_x ? xlo : ylo;
        }
        if (pos == slots) break;
    }
    return out;
}

}  // namespace

ChainElement generate_chain(const SuiteConfig& cfg, Rng& rng, const ModulusPair& p, std::size_t n, ChainClass cls) {
    if (cls == ChainClass::FULL_HH) throw std::invalid_argument("generate_chain: class must be P_HH or M_HH");
    const bool p_class = cls == ChainClass::P_HH;
    const std::size_t factors = n + 1;
    const int xlo = cfg.exp_lo, xhi = cfg.exp_hi;
    const int ylo = std::max(0, cfg.exp_lo), yhi = cfg.exp_hi;
    if (p.t() > 0 && yhi < ylo) throw std::invalid_argument("generate_chain: no admissible y-exponents in the window");
    for (std::size_t j = 0; j < p.s(); ++j)
        if (static_cast<long>(factors) * xhi < class_bound(p, j, p_class))
            throw std::invalid_argument("generate_chain: no in-class tensor in the exponent window");

    // Window size, capped to avoid overflow.
    std::size_t count = 1;
    for (std::size_t f = 0; f < factors && count <= kEnumerationLimit; ++f) {
        for (std::size_t j = 0; j < p.s() && count <= kEnumerationLimit; ++j) count *= static_cast<std::size_t>(xhi - xlo + 1);
        for (std::size_t l = 0; l < p.t() && count <= kEnumerationLimit; ++l) count *= static_cast<std::size_t>(yhi - ylo + 1);
    }
    std::vector<Tensor> pool;
    if (count <= kEnumerationLimit) {
        pool = enumerate_class(p, factors, xlo, xhi, ylo, yhi, cls);
        if (pool.empty()) throw std::invalid_argument("generate_chain: no in-class tensor in the exponent window");
    }

    auto draw = [&]() {
        if (!pool.empty()) return pool[uniform_size(rng, 0, pool.size() - 1)];
        Tensor t(factors, p.one());
        for (auto& m : t) {
            for (auto& v : m.i) v = uniform(rng, xlo, xhi);
            for (auto& v : m.k) v = uniform(rng, ylo, yhi);
        }
        for (std::size_t j = 0; j < p.s(); ++j) {
            long sum = 0;
            for (const auto& m : t) sum += m.i[j];
            while (sum < class_bound(p, j, p_class)) {
                auto& v = t[uniform_size(rng, 0, factors - 1)].i[j];
                if (v < xhi) {
                    ++v;
                    ++sum;
                }
            }
        }
        return t;
    };

    ChainElement out(p, n);
    const std::size_t terms = uniform_size(rng, 1, 3);
    for (std::size_t k = 0; k < terms || out.is_zero(); ++k) out.add(draw(), generate_coefficient(rng));
    return out;
}

LogForm generate_form(const SuiteConfig& cfg, Rng& rng, const ModulusPair& p, std::size_t q, FormClass cls) {
    if (cls == FormClass::FULL) throw std::invalid_argument("generate_form: class must be P_OMEGA or M_OMEGA");
    if (q > p.s() + p.t()) throw std::invalid_argument("generate_form: degree exceeds s + t");
    const bool p_class = cls == FormClass::P_OMEGA;
    const int ylo = std::max(0, cfg.exp_lo);
    if (p.t() > 0 && cfg.exp_hi < ylo) throw std::invalid_argument("generate_form: no admissible y-exponents");
    for (std::size_t j = 0; j < p.s(); ++j)
        if (cfg.exp_hi < class_bound(p, j, p_class)) throw std::invalid_argument("generate_form: empty exponent window");

    std::vector<std::size_t> letters(p.s() + p.t());
    std::iota(letters.begin(), letters.end(), 0);
    LogForm out(p, q);
    const std::size_t terms = uniform_size(rng, 1, 3);
    for (std::size_t n = 0; n < terms || out.is_zero(); ++n) {
        std::shuffle(letters.begin(), letters.end(), rng);
        FormTerm term{p.one(), {}, {}};
        for (std::size_t a = 0; a < q; ++a) {
            if (letters[a] < p.s()) term.S.push_back(letters[a]);
            else term.T.push_back(letters[a] - p.s());
        }
        std::sort(term.S.begin(), term.S.end());
        std::sort(term.T.begin(), term.T.end());
        for (std::size_t j = 0; j < p.s(); ++j)
            term.mono.i[j] = uniform(rng, std::max(cfg.exp_lo, class_bound(p, j, p_class)), cfg.exp_hi);
        for (auto& v : term.mono.k) v = uniform(rng, ylo, cfg.exp_hi);
        out.add(term, generate_coefficient(rng));
    }
    return out;
}

namespace {

struct Outcome {
    std::map<std::string, std::size_t> checks;
    std::vector<CaseFailure> failures;
};

class Case {
public:
    Case(std::size_t index, std::uint64_t seed) : index_(index), seed_(seed) {}

    void set_pair(const ModulusPair& p) { pair_ = describe(p); }

    void expect(const std::string& check, bool ok, const std::string& input, const std::string& detail = "") {
        ++out.checks[check];
        if (!ok) out.failures.push_back(CaseFailure{index_, seed_, check, pair_, input, detail});
    }

    Outcome out;

private:
    std::size_t index_;
    std::uint64_t seed_;
    std::string pair_;
};

using CaseBody = std::function<void(Case&, Rng&, std::size_t)>;

void run_cases(SuiteReport& report, const SuiteConfig& cfg, std::size_t count, std::size_t offset, Execution exec,
               const CaseBody& body) {
    const auto outcomes = map_indices<Outcome>(
        count,
        [&](std::size_t local) {
            const std::size_t index = offset + local;
            Rng rng = sample_rng(cfg.seed, index);
            Case c(index, derive_seed(cfg.seed, index));
            try {
                body(c, rng, local);
            } catch (const std::exception& e) {
                c.expect("exception", false, "", e.what());
            }
            return c.out;
        },
        exec);
    report.cases += count;
    for (const auto& o : outcomes) {
        for (const auto& [name, n] : o.checks) report.checks[name] += n;
        report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
    }
}

ChainClass random_chain_class(Rng& rng) { return uniform(rng, 0, 1) == 0 ? ChainClass::P_HH : ChainClass::M_HH; }

void identities_suite(SuiteReport& report, const SuiteConfig& cfg, std::size_t samples, Execution exec) {
    run_cases(report, cfg, samples, 0, exec, [&](Case& c, Rng& rng, std::size_t) {
        const ModulusPair p = generate_pair(rng, cfg);
        c.set_pair(p);
        const std::size_t n = uniform_size(rng, 0, cfg.max_n);
        const ChainElement z = generate_chain(cfg, rng, p, n, random_chain_class(rng));
        const std::string input = to_string(z);
        const ChainElement bz = hochschild_b(z);
        const ChainElement Bz = connes_B(z);
        c.expect("b^2", hochschild_b(bz).is_zero(), input);
        c.expect("B^2", connes_B(Bz).is_zero(), input);
        const ChainElement anti = n == 0 ? hochschild_b(Bz) : hochschild_b(Bz) + connes_B(bz);
        c.expect("bB+Bb", anti.is_zero(), input, to_string(anti));
    });
}

bool identities_precheck(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    SuiteReport pre;
    identities_suite(pre, cfg, std::min<std::size_t>(cfg.samples, 100), exec);
    if (pre.passed()) return true;
    CaseFailure f = pre.failures.front();
    f.detail = "identities failed (" + f.check + "); dependent suite aborted";
    f.check = "identities_precheck";
    report.failures.push_back(f);
    return false;
}

void closure_suite(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    run_cases(report, cfg, cfg.samples, 0, exec, [&](Case& c, Rng& rng, std::size_t) {
        const ModulusPair p = generate_pair(rng, cfg);
        c.set_pair(p);
        const std::size_t q = uniform_size(rng, 0, p.s() + p.t());
        const LogForm wm = generate_form(cfg, rng, p, q, FormClass::M_OMEGA);
        c.expect("d(M-Omega)", classify(de_rham_d(wm)) != FormClass::FULL, to_string(wm));
        const LogForm wp = generate_form(cfg, rng, p, q, FormClass::P_OMEGA);
        c.expect("d(P-Omega)", classify(de_rham_d(wp)) == FormClass::P_OMEGA, to_string(wp));

        const std::size_t n = uniform_size(rng, 0, cfg.max_n);
        const ChainElement z = generate_chain(cfg, rng, p, n, ChainClass::M_HH);
        const std::string input = to_string(z);
        c.expect("b(M-HH)", classify_chain(hochschild_b(z)) != ChainClass::FULL_HH, input);
        c.expect("t(M-HH)", classify_chain(cyclic_t(z)) != ChainClass::FULL_HH, input);
        c.expect("B(M-HH)", classify_chain(connes_B(z)) != ChainClass::FULL_HH, input);
        const ChainElement zp = generate_chain(cfg, rng, p, n, ChainClass::P_HH);
        c.expect("b(P-HH)", classify_chain(hochschild_b(zp)) == ChainClass::P_HH, to_string(zp));
        c.expect("B(P-HH)", classify_chain(connes_B(zp)) == ChainClass::P_HH, to_string(zp));

        const std::size_t da = uniform_size(rng, 0, cfg.max_n);
        const std::size_t db = uniform_size(rng, 0, cfg.max_n - da);
        const ChainElement a = generate_chain(cfg, rng, p, da, ChainClass::P_HH);
        const ChainElement b = generate_chain(cfg, rng, p, db, ChainClass::P_HH);
        c.expect("shuffle(P-HH,P-HH)", classify_chain(shuffle(a, b)) == ChainClass::P_HH,
                 to_string(a) + " | " + to_string(b));
    });
}

// Every degree-1 tensor of the window in the class, plus the degree-1 basis forms.
void degree_one_case(Case& c, const ModulusPair& p, int xlo, int xhi, int yhi) {
    c.set_pair(p);
    for (ChainClass cls : {ChainClass::P_HH, ChainClass::M_HH}) {
        for (const Tensor& t : enumerate_class(p, 2, xlo, xhi, 0, yhi, cls)) {
            const ChainElement z = ChainElement::single(p, t);
            const std::string input = to_string(z);
            const LogForm ez = hkr_e(z);
            const ChainElement w = degree_one_homotopy(z);
            c.expect("deg1 b(H(z)) = z - eps(e(z))", hochschild_b(w) == z - hkr_eps(ez), input);
            const ChainClass wc = classify_chain(w);
            c.expect("deg1 H stays in class", cls == ChainClass::P_HH ? wc == ChainClass::P_HH : wc != ChainClass::FULL_HH,
                     input, to_string(w));
            c.expect("deg1 e(eps(e(z))) = e(z)", hkr_e(hkr_eps(ez)) == ez, input);
        }
    }
    if (p.s() + p.t() == 0) return;
    for (const Multidegree& deg : multidegree_window(p, xlo, xhi, 0, yhi)) {
        for (FormClass cls : {FormClass::P_OMEGA, FormClass::M_OMEGA}) {
            for (const FormTerm& term : basis_of(p, cls, 1, deg)) {
                const LogForm w = LogForm::single(p, term);
                const ChainElement psi = hkr_eps(w);
                c.expect("deg1 e(psi(w)) = w", hkr_e(psi) == w, to_string(w));
                const ChainClass pc = classify_chain(psi);
                c.expect("deg1 psi stays in class",
                         cls == FormClass::P_OMEGA ? pc == ChainClass::P_HH : pc != ChainClass::FULL_HH, to_string(w));
            }
        }
    }
}

std::vector<ModulusPair> pair_grid(std::size_t max_s, std::size_t max_t, int max_r) {
    std::vector<ModulusPair> out;
    for (std::size_t s = 0; s <= max_s; ++s) {
        for (std::size_t t = 0; t <= max_t; ++t) {
            std::vector<int> r(s, 1);
            while (true) {
                out.emplace_back(s, t, r);
                std::size_t pos = 0;
                for (; pos < s; ++pos) {
                    if (r[pos] < max_r) {
                        ++r[pos];
                        break;
                    }
                    r[pos] = 1;
                }
                if (pos == s) break;
            }
        }
    }
    return out;
}

void hkr_suite(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    run_cases(report, cfg, cfg.samples, 0, exec, [&](Case& c, Rng& rng, std::size_t) {
        const ModulusPair p = generate_pair(rng, cfg);
        c.set_pair(p);
        const std::size_t q = uniform_size(rng, 0, std::min<std::size_t>(4, p.s() + p.t()));
        const LogForm w = generate_form(cfg, rng, p, q, FormClass::M_OMEGA);
        const ChainElement ew = hkr_eps(w);
        c.expect("e(eps(w)) = w", hkr_e(ew) == w, to_string(w));
        c.expect("b(eps(w)) = 0", hochschild_b(ew).is_zero(), to_string(w));

        const std::size_t n = uniform_size(rng, 0, cfg.max_n);
        const ChainElement z = generate_chain(cfg, rng, p, n, ChainClass::M_HH);
        const std::string input = to_string(z);
        if (n > 0) c.expect("e(b(z)) = 0", hkr_e(hochschild_b(z)).is_zero(), input);
        c.expect("e(B(z)) = d(e(z))", hkr_e(connes_B(z)) == de_rham_d(hkr_e(z)), input);
    });

    const std::vector<ModulusPair> grid = pair_grid(cfg.max_s, cfg.max_t, cfg.max_r);
    run_cases(report, cfg, grid.size(), cfg.samples, exec, [&](Case& c, Rng&, std::size_t local) {
        const ModulusPair& p = grid[local];
        const bool wide = p.s() + p.t() <= 2;
        degree_one_case(c, p, wide ? -2 : -1, wide ? 2 : 1, wide ? 2 : 1);
    });
}

void derham_suite(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    run_cases(report, cfg, cfg.samples, 0, exec, [&](Case& c, Rng& rng, std::size_t) {
        const ModulusPair p = generate_pair(rng, cfg);
        c.set_pair(p);
        Multidegree deg{std::vector<int>(p.s()), std::vector<int>(p.t())};
        for (auto& v : deg.dx) v = uniform(rng, cfg.deg_lo, cfg.deg_hi);
        for (auto& v : deg.dy) v = uniform(rng, 0, cfg.ydeg_hi);
        const std::string input = to_string(deg);
        const GradedComplex cx = build_forms_complex(p, deg);
        const ComplexRanks ranks(cx);
        long euler_chain = 0, euler_cohomology = 0;
        for (long q = 0; q <= static_cast<long>(cx.top()); ++q) {
            const long sign = q % 2 == 0 ? 1 : -1;
            euler_chain += sign * static_cast<long>(ranks.dim(q));
            euler_cohomology += sign * static_cast<long>(ranks.cohomology(q));
            const auto& d = cx.differential[static_cast<std::size_t>(q)];
            c.expect("dim ker d = dim - rank", kernel_basis(d).size() == ranks.dim(q) - ranks.rank_d(q), input);
            c.expect("HKR dimension", hh_dimension(p, deg, static_cast<std::size_t>(q)) == ranks.dim(q), input);
            const auto pbasis = basis_of(p, FormClass::P_OMEGA, static_cast<std::size_t>(q), deg);
            const auto& mbasis = cx.bases[static_cast<std::size_t>(q)];
            c.expect("P-Omega inside M-Omega",
                     std::all_of(pbasis.begin(), pbasis.end(),
                                 [&](const FormTerm& t) { return std::binary_search(mbasis.begin(), mbasis.end(), t); }),
                     input);
        }
        c.expect("Euler characteristic", euler_chain == euler_cohomology, input);
    });
}

void cyclic_suite(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    struct Cell {
        ModulusPair pair;
        Multidegree deg;
    };
    std::vector<Cell> cells;
    for (const ModulusPair& p : pair_grid(cfg.max_s, cfg.max_t, cfg.max_r))
        for (const Multidegree& d : multidegree_window(p, cfg.deg_lo, cfg.deg_hi, 0, cfg.ydeg_hi)) cells.push_back({p, d});
    run_cases(report, cfg, cells.size(), 0, exec, [&](Case& c, Rng&, std::size_t local) {
        const Cell& cell = cells[local];
        c.set_pair(cell.pair);
        const GradedComplex cx = build_forms_complex(cell.pair, cell.deg);
        const ComplexRanks ranks(cx);
        for (CyclicVariant v : {CyclicVariant::HC, CyclicVariant::HC_MINUS, CyclicVariant::HP}) {
            for (long n = 0; n <= cfg.cyclic_n_hi; ++n) {
                const std::size_t formula = cyclic_dims_formula(ranks, v, n);
                const std::size_t oracle = cyclic_dims_bicomplex(cx, v, n);
                c.expect(std::string(to_string(v)) + " formula = bicomplex", formula == oracle,
                         to_string(cell.deg) + " n=" + std::to_string(n),
                         "formula " + std::to_string(formula) + ", bicomplex " + std::to_string(oracle));
            }
        }
    });
}

struct MonoidConfig {
    std::string name;
    MonoidMap map;
};

std::vector<MonoidConfig> monoid_configs() {
    const FgAbMonoid N{1, 0}, N2{2, 0}, NZ{1, 1}, Z{0, 1}, Z2{0, 2};
    return {
        {"N over 0", MonoidMap::zero(N)},
        {"N over Z (trivial)", MonoidMap(Z, N, IntMatrix{{0}})},
        {"N^2 over 0", MonoidMap::zero(N2)},
        {"N^2 over Z (trivial)", MonoidMap(Z, N2, IntMatrix{{0}, {0}})},
        {"N+Z over 0", MonoidMap::zero(NZ)},
        {"N+Z over Z (summand)", MonoidMap(Z, NZ, IntMatrix{{0}, {1}})},
        {"N+Z over Z (index 2)", MonoidMap(Z, NZ, IntMatrix{{0}, {2}})},
        {"Z^2 over Z", MonoidMap(Z, Z2, IntMatrix{{1}, {2}})},
    };
}

LatticeVector random_vector(Rng& rng, std::size_t rank, int lo, int hi) {
    LatticeVector v(rank);
    for (auto& x : v) x = uniform(rng, lo, hi);
    return v;
}

std::string describe(const std::vector<LatticeVector>& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < g[i].size(); ++j) out += (j ? "," : "") + g[i][j].get_str();
        out += "]";
    }
    return out + ")";
}

void repletion_suite(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    const auto configs = monoid_configs();
    const std::size_t max_tuple = 4;
    const std::size_t per = cfg.samples;
    const std::size_t total = configs.size() * max_tuple * per;
    run_cases(report, cfg, total, 0, exec, [&](Case& c, Rng& rng, std::size_t local) {
        const MonoidConfig& mc = configs[local / (max_tuple * per)];
        const std::size_t n = 1 + (local / per) % max_tuple;
        const FgAbMonoid& m = mc.map.target();
        const RepletionResult rep = repletion_iso(mc.map, n);
        const int lo = cfg.exp_lo, hi = cfg.exp_hi;

        auto in_rep = [&]() {
            std::vector<LatticeVector> g(n);
            LatticeVector base = random_vector(rng, m.rank(), lo, hi);
            for (std::size_t j = 0; j < m.a; ++j) base[j] = abs(base[j]);
            g[0] = base;
            for (std::size_t i = 1; i < n; ++i) {
                g[i] = random_vector(rng, m.rank(), lo, hi);
                for (std::size_t j = 0; j < m.rank(); ++j) g[0][j] -= g[i][j];
            }
            return g;
        };
        const std::string input = mc.name + " n=" + std::to_string(n);

        const auto g = in_rep();
        const auto h = in_rep();
        const SplitElement x = rep.forward(g);
        c.expect("backward(forward(g)) ~ g", rep.equivalent(rep.backward(x), g), input + " " + describe(g));
        c.expect("forward(backward(forward(g))) = forward(g)", rep.forward(rep.backward(x)) == x, input + " " + describe(g));

        SplitElement y{random_vector(rng, m.rank(), lo, hi), {}};
        for (std::size_t j = 0; j < m.a; ++j) y.m[j] = abs(y.m[j]);
        for (std::size_t i = 1; i < n; ++i) y.quotient.push_back(rep.quotient().reduce(random_vector(rng, m.rank(), lo, hi)));
        c.expect("forward(backward(y)) = y", rep.forward(rep.backward(y)) == y, input);

        std::vector<LatticeVector> gh(n);
        for (std::size_t i = 0; i < n; ++i) {
            gh[i] = g[i];
            for (std::size_t j = 0; j < m.rank(); ++j) gh[i][j] += h[i][j];
        }
        c.expect("forward is additive", rep.forward(gh) == rep.add(x, rep.forward(h)), input + " " + describe(g));

        // g + r for r in {(phi(p_i)) : sum p_i = 0} has the same image.
        std::vector<LatticeVector> shifted = g;
        const std::size_t prank = mc.map.source().rank();
        LatticeVector psum(prank, 0);
        for (std::size_t i = 1; i < n; ++i) {
            LatticeVector pi = random_vector(rng, prank, lo, hi);
            for (std::size_t j = 0; j < prank; ++j) psum[j] += pi[j];
            const LatticeVector img = mc.map.apply(pi);
            for (std::size_t j = 0; j < m.rank(); ++j) shifted[i][j] += img[j];
        }
        for (auto& v : psum) v = -v;
        const LatticeVector img0 = mc.map.apply(psum);
        for (std::size_t j = 0; j < m.rank(); ++j) shifted[0][j] += img0[j];
        c.expect("forward is well defined", rep.forward(shifted) == x, input + " " + describe(g));

        std::vector<LatticeVector> any(n);
        for (auto& v : any) v = random_vector(rng, m.rank(), lo, hi);
        c.expect("splitting: membership through the N-part",
                 rep_membership(m, any) == rep_membership(FgAbMonoid{m.a, 0}, project_to_nonunit_part(m, any)),
                 input + " " + describe(any));
        if (m.is_group()) c.expect("group repletion is the full sum", rep.contains(any), input + " " + describe(any));
    });

    struct BarWindow {
        ModulusPair pair;
        std::size_t n;
    };
    std::vector<BarWindow> windows;
    for (const auto& [s, t] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}})
        for (std::size_t n = 0; n <= 3; ++n) windows.push_back({ModulusPair(s, t, std::vector<int>(s, 2)), n});
    run_cases(report, cfg, windows.size(), total, exec, [&](Case& c, Rng&, std::size_t local) {
        const BarWindow& w = windows[local];
        c.set_pair(w.pair);
        const ModulusPair& p = w.pair;
        const std::size_t slots = (w.n + 1) * (p.s() + p.t());
        const std::size_t width = p.s() + p.t();
        std::vector<int> e(slots);
        for (std::size_t idx = 0; idx < slots; ++idx) e[idx] = idx % width < p.s() ? -3 : 0;
        Tensor t(w.n + 1, p.one());
        std::size_t evaluated = 0, mismatches = 0;
        std::string first;
        while (true) {
            for (std::size_t f = 0; f <= w.n; ++f) {
                for (std::size_t j = 0; j < p.s(); ++j) t[f].i[j] = e[f * width + j];
                for (std::size_t l = 0; l < p.t(); ++l) t[f].k[l] = e[f * width + p.s() + l];
            }
            ++evaluated;
            if (replete_bar_predicate(p, w.n, t) != tensor_in_class(p, t, ChainClass::P_HH)) {
                if (mismatches++ == 0) first = to_string(t);
            }
            std::size_t pos = 0;
            for (; pos < slots; ++pos) {
                if (e[pos] < 3) {
                    ++e[pos];
                    break;
                }
                e[pos] = pos % width < p.s() ? -3 : 0;
            }
            if (pos == slots) break;
        }
        c.out.checks["replete bar = P-HH"] += evaluated - 1;
        c.expect("replete bar = P-HH", mismatches == 0, "n=" + std::to_string(w.n),
                 mismatches ? std::to_string(mismatches) + " mismatches, first " + first : "");
    });
}

void probe_suite(SuiteReport& report, const SuiteConfig& cfg, Execution exec) {
    SuiteConfig local = cfg;
    local.max_s = std::min<std::size_t>(cfg.max_s, 2);
    local.max_t = std::min<std::size_t>(cfg.max_t, 1);
    local.exp_lo = std::max(cfg.exp_lo, -std::min(cfg.pole_bound, 2));
    local.exp_hi = std::min(cfg.exp_hi, 2);
    run_cases(report, cfg, cfg.samples, 0, exec, [&](Case& c, Rng& rng, std::size_t index) {
        const ModulusPair p = generate_pair(rng, local);
        c.set_pair(p);
        // Odd samples rotate a degree-1 cycle (every degree-1 chain is a cycle).
        const bool rotate = index % 2 == 1;
        const std::size_t n = !rotate && p.s() + p.t() <= 1 ? uniform_size(rng, 1, 2) : 1;
        const ChainElement u = generate_chain(local, rng, p, n + 1, ChainClass::M_HH);
        ChainElement z = hochschild_b(u);
        if (n <= p.s() + p.t()) z += hkr_eps(generate_form(local, rng, p, n, FormClass::M_OMEGA));
        if (rotate) z = cyclic_t(z);
        const ProbeResult r = hkr_cycle_probe(p, z, cfg.pole_bound);
        c.expect("probe confirmed", r.status == ProbeStatus::Confirmed, to_string(z), r.note);
        if (r.witness) c.expect("witness bounds z - eps(e(z))", hochschild_b(*r.witness) == z - hkr_eps(hkr_e(z)), to_string(z));
    });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg, Execution exec) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.seed = cfg.seed;
    if (name == "identities") identities_suite(report, cfg, cfg.samples, exec);
    else if (name == "closure") closure_suite(report, cfg, exec);
    else if (name == "hkr_roundtrip") {
        if (identities_precheck(report, cfg, exec)) hkr_suite(report, cfg, exec);
    } else if (name == "derham") derham_suite(report, cfg, exec);
    else if (name == "cyclic_oracle") {
        if (identities_precheck(report, cfg, exec)) cyclic_suite(report, cfg, exec);
    } else if (name == "repletion") repletion_suite(report, cfg, exec);
    else probe_suite(report, cfg, exec);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace modhom
