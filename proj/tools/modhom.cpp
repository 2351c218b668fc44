// modhom: dimension tables, de Rham cohomology, cyclic homology with an
// oracle cross-check, property suites, the HKR probe and monoid repletion.
//
// Exit codes: 0 success, 1 property or oracle failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modhom/homology.hpp"
#include "modhom/monoids.hpp"
#include "modhom/syntax.hpp"
#include "modhom/verify.hpp"

using namespace modhom;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PairFlags {
    std::size_t s = 0;
    std::size_t t = 0;
    std::string r;

    ModulusPair build() const {
        std::vector<int> rv = parse_int_list(r);
        if (rv.empty() && s > 0) throw UsageError("--r is required when --s > 0");
        if (rv.size() == 1 && s > 1) rv.assign(s, rv.front());
        return ModulusPair(s, t, rv);
    }
};

struct DegreeFlags {
    std::string deg;
    std::string window;
    std::string ywindow;

    std::vector<Multidegree> build(const ModulusPair& p) const {
        if (!deg.empty() && !window.empty()) throw UsageError("--deg and --deg-window are exclusive");
        if (!deg.empty()) return {parse_multidegree(p, deg)};
        if (window.empty()) {
            if (p.s() + p.t() == 0) return {Multidegree{}};
            throw UsageError("a multidegree (--deg) or window (--deg-window) is required");
        }
        const auto [lo, hi] = parse_range(window);
        long ylo = std::max(0L, lo), yhi = hi;
        if (!ywindow.empty()) std::tie(ylo, yhi) = parse_range(ywindow);
        if (p.t() > 0 && (ylo < 0 || yhi < ylo)) throw UsageError("y-degree window must be a non-negative range");
        return multidegree_window(p, static_cast<int>(lo), static_cast<int>(hi), static_cast<int>(ylo),
                                  static_cast<int>(yhi));
    }
};

void add_pair(CLI::App* cmd, PairFlags& f) {
    cmd->add_option("--s", f.s, "number of modulus variables x_j");
    cmd->add_option("--t", f.t, "number of smooth variables y_l");
    cmd->add_option("--r", f.r, "modulus exponents r_1,...,r_s (a single value applies to all)");
}

void add_degree(CLI::App* cmd, DegreeFlags& f) {
    cmd->add_option("--deg", f.deg, "multidegree: s x-degrees then t y-degrees, comma separated");
    cmd->add_option("--deg-window", f.window, "x-degree window LO..HI");
    cmd->add_option("--ydeg-window", f.ywindow, "y-degree window LO..HI (default max(0,LO)..HI)");
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

std::vector<std::size_t> values(const std::map<long, std::size_t>& m) {
    std::vector<std::size_t> out;
    for (const auto& [n, v] : m) out.push_back(v);
    return out;
}

void print_reports(const std::vector<DimensionReport>& reports, const std::string& format, const char* label) {
    if (format == "json") {
        std::cout << to_json(reports).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << to_csv(reports);
    } else if (reports.size() == 1 && reports.front().oracle.empty()) {
        std::cout << join(values(reports.front().dims)) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << to_string(r.deg);
            for (const auto& [n, v] : r.dims) std::cout << ' ' << label << n << '=' << v;
            if (!r.oracle.empty())
                std::cout << " oracle=" << join(values(r.oracle)) << " match=" << (r.oracle == r.dims ? "true" : "false");
            std::cout << "\n";
        }
    }
}

void check_format(const std::string& format) {
    if (format != "text" && format != "json" && format != "csv")
        throw UsageError("--format must be text, json or csv");
}

IntMatrix parse_matrix(const std::string& text, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    std::vector<std::string> row_texts;
    std::stringstream ss(text);
    for (std::string row; std::getline(ss, row, ';');) row_texts.push_back(row);
    if (text.empty()) row_texts.clear();
    if (row_texts.size() != rows) throw UsageError("--map needs " + std::to_string(rows) + " rows separated by ';'");
    for (std::size_t r = 0; r < rows; ++r) {
        const std::vector<int> entries = parse_int_list(row_texts[r]);
        if (entries.size() != cols) throw UsageError("--map rows need " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entries[c];
    }
    return m;
}

std::string lattice_string(const LatticeVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + "]";
}

nlohmann::ordered_json lattice_json(const LatticeVector& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modulus Hochschild, de Rham and cyclic homology of monomial modulus pairs"};
    app.require_subcommand(1);

    PairFlags pair;
    DegreeFlags degree;
    std::string format = "text";

    auto* dims = app.add_subcommand("dims", "dimensions of M-Omega^q (= M-HH_q) or P-Omega^q per multidegree");
    std::string qs = "0";
    std::string cls = "M";
    add_pair(dims, pair);
    add_degree(dims, degree);
    dims->add_option("--q", qs, "form degree(s), comma separated");
    dims->add_option("--class", cls, "P or M");
    dims->add_option("--format", format, "text, json or csv");

    auto* cohomology = app.add_subcommand("cohomology", "de Rham cohomology of M-Omega per multidegree");
    add_pair(cohomology, pair);
    add_degree(cohomology, degree);
    cohomology->add_option("--format", format, "text, json or csv");

    auto* cyclic = app.add_subcommand("cyclic", "HC, HC^- or HP dimensions per multidegree");
    std::string variant = "hc";
    std::string n_range = "0..6";
    bool oracle = false;
    add_pair(cyclic, pair);
    add_degree(cyclic, degree);
    cyclic->add_option("--variant", variant, "hc, hcminus or hp");
    cyclic->add_option("--n-range", n_range, "homological degrees LO..HI");
    cyclic->add_flag("--oracle", oracle, "cross-check against the total complex of the bicomplex");
    cyclic->add_option("--format", format, "text, json or csv");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    SuiteConfig cfg;
    std::string suite;
    std::string exp_window;
    std::string deg_window;
    bool serial = false;
    bool timing = false;
    verify->add_option("--suite", suite, "identities, closure, hkr_roundtrip, derham, cyclic_oracle, repletion, probe or all")
        ->required();
    verify->add_option("--seed", cfg.seed, "root seed");
    verify->add_option("--samples", cfg.samples, "samples per suite (per configuration for repletion)");
    verify->add_option("--max-s", cfg.max_s);
    verify->add_option("--max-t", cfg.max_t);
    verify->add_option("--max-r", cfg.max_r);
    verify->add_option("--max-n", cfg.max_n);
    verify->add_option("--exp-lo", cfg.exp_lo);
    verify->add_option("--exp-hi", cfg.exp_hi);
    verify->add_option("--deg-window", deg_window, "x-degree window LO..HI for derham and cyclic_oracle");
    verify->add_option("--ydeg-hi", cfg.ydeg_hi, "largest y-degree for derham and cyclic_oracle");
    verify->add_option("--n-hi", cfg.cyclic_n_hi, "largest homological degree for cyclic_oracle");
    verify->add_option("--pole-bound", cfg.pole_bound, "pole bound for the probe suite");
    verify->add_flag("--serial", serial, "use the serial reference path");
    verify->add_flag("--timing", timing, "include wall time in the report");

    auto* probe = app.add_subcommand("probe", "search a chain w with b(w) = z - eps(e(z)) for an M-HH cycle z");
    std::string chain;
    int pole_bound = 4;
    std::size_t max_columns = ProbeLimits{}.max_columns;
    add_pair(probe, pair);
    probe->add_option("--chain", chain, "cycle, e.g. \"x1^-1*y1 (x) x1^2 + -1*x1^2 (x) x1^-1*y1\"")->required();
    probe->add_option("--pole-bound", pole_bound, "largest pole order allowed in the witness");
    probe->add_option("--max-columns", max_columns, "largest search window per multidegree");
    probe->add_option("--format", format, "text or json");

    auto* monoid = app.add_subcommand("monoid", "repletion of the fold map of n copies of M over P");
    std::string m_text, p_text = "0", map_text, tuple_text;
    std::size_t n = 2;
    monoid->add_option("--monoid", m_text, "M, e.g. N^2+Z^1")->required();
    monoid->add_option("--over", p_text, "P, e.g. Z^1 (default 0)");
    monoid->add_option("--map", map_text, "matrix of P -> M: rows separated by ';', entries by ','");
    monoid->add_option("--n", n, "number of copies");
    monoid->add_option("--tuple", tuple_text, "element of (M^gp)^n: vectors separated by ';', entries by ','");
    monoid->add_option("--format", format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dims->parsed()) {
            check_format(format);
            const ModulusPair p = pair.build();
            FormClass fc;
            if (cls == "M") fc = FormClass::M_OMEGA;
            else if (cls == "P") fc = FormClass::P_OMEGA;
            else throw UsageError("--class must be P or M");
            std::vector<std::size_t> qv;
            for (int q : parse_int_list(qs)) {
                if (q < 0) throw UsageError("--q must be non-negative");
                qv.push_back(static_cast<std::size_t>(q));
            }
            if (qv.empty()) throw UsageError("--q is empty");
            print_reports(hh_table(p, fc, degree.build(p), qv), format, "q");
            return 0;
        }
        if (cohomology->parsed()) {
            check_format(format);
            const ModulusPair p = pair.build();
            print_reports(cohomology_table(p, degree.build(p)), format, "H");
            return 0;
        }
        if (cyclic->parsed()) {
            check_format(format);
            const ModulusPair p = pair.build();
            const auto v = parse_variant(variant);
            if (!v) throw UsageError("--variant must be hc, hcminus or hp");
            const auto [lo, hi] = parse_range(n_range);
            const auto reports = cyclic_table(p, degree.build(p), *v, lo, hi, oracle);
            if (format == "text" && reports.size() == 1) {
                std::cout << join(values(reports.front().dims)) << "\n";
                if (oracle)
                    std::cout << "oracle " << join(values(reports.front().oracle))
                              << " match=" << (reports.front().oracle == reports.front().dims ? "true" : "false")
                              << "\n";
            } else {
                print_reports(reports, format, to_string(*v));
            }
            for (const auto& r : reports)
                if (oracle && r.oracle != r.dims) return 1;
            return 0;
        }
        if (verify->parsed()) {
            if (!deg_window.empty()) {
                const auto [lo, hi] = parse_range(deg_window);
                cfg.deg_lo = static_cast<int>(lo);
                cfg.deg_hi = static_cast<int>(hi);
            }
            std::vector<std::string> names;
            if (suite == "all") names = suite_names();
            else {
                const auto& known = suite_names();
                if (std::find(known.begin(), known.end(), suite) == known.end())
                    throw UsageError("unknown suite '" + suite + "'");
                names = {suite};
            }
            cfg.validate();
            bool ok = true;
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (const auto& name : names) {
                const SuiteReport report = run_suite(name, cfg, serial ? Execution::Serial : Execution::Parallel);
                std::cerr << name << ": " << report.cases << " cases, " << report.failures.size() << " failures, "
                          << report.wall_seconds << " s\n";
                ok = ok && report.passed();
                out.push_back(to_json(report, timing));
            }
            std::cout << (names.size() == 1 ? out.front() : out).dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (probe->parsed()) {
            const ModulusPair p = pair.build();
            const ChainElement z = parse_chain(p, chain);
            const ProbeResult r = hkr_cycle_probe(p, z, pole_bound, ProbeLimits{max_columns});
            const bool confirmed = r.status == ProbeStatus::Confirmed;
            if (format == "json") {
                nlohmann::ordered_json out;
                out["status"] = confirmed ? "confirmed" : "inconclusive";
                out["pole_bound_used"] = r.pole_bound_used;
                out["witness"] = r.witness ? to_string(*r.witness) : "";
                out["note"] = r.note;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << (confirmed ? "confirmed" : "inconclusive");
                if (confirmed) std::cout << " pole_bound=" << r.pole_bound_used << "\nwitness " << to_string(*r.witness);
                else std::cout << "\n" << r.note;
                std::cout << "\n";
            }
            return 0;
        }
        if (monoid->parsed()) {
            const FgAbMonoid m = parse_monoid(m_text);
            const FgAbMonoid pm = parse_monoid(p_text);
            const IntMatrix matrix = pm.rank() == 0 ? IntMatrix(m.rank(), 0) : parse_matrix(map_text, m.rank(), pm.rank());
            const MonoidMap map(pm, m, matrix);
            const RepletionResult rep = repletion_iso(map, n);
            const LatticeQuotient& q = rep.quotient();
            std::string quotient;
            for (const auto& d : q.torsion()) quotient += (quotient.empty() ? "" : "+") + std::string("Z/") + d.get_str();
            if (q.free_rank() > 0)
                quotient += (quotient.empty() ? "" : "+") + std::string("Z^") + std::to_string(q.free_rank());
            if (quotient.empty()) quotient = "0";

            nlohmann::ordered_json out;
            out["monoid"] = to_string(m);
            out["over"] = to_string(pm);
            out["n"] = n;
            out["group_completion"] = to_string(group_completion(m));
            out["quotient"] = quotient;
            out["repletion"] = to_string(m) + " + (" + quotient + ")^" + std::to_string(n - 1);
            std::string text = "group completion " + out["group_completion"].get<std::string>() + "\nquotient " +
                               quotient + "\nrepletion " + out["repletion"].get<std::string>() + "\n";
            if (!tuple_text.empty()) {
                std::vector<LatticeVector> g;
                std::stringstream ss(tuple_text);
                for (std::string part; std::getline(ss, part, ';');) {
                    LatticeVector v;
                    for (int x : parse_int_list(part)) v.push_back(x);
                    g.push_back(v);
                }
                if (g.size() != n) throw UsageError("--tuple needs " + std::to_string(n) + " vectors");
                const bool member = rep.contains(g);
                out["member"] = member;
                text += std::string("member ") + (member ? "true" : "false") + "\n";
                if (member) {
                    const SplitElement x = rep.forward(g);
                    nlohmann::ordered_json qs_json = nlohmann::ordered_json::array();
                    text += "image " + lattice_string(x.m);
                    for (const auto& v : x.quotient) {
                        qs_json.push_back(lattice_json(v));
                        text += " " + lattice_string(v);
                    }
                    text += "\n";
                    out["image"] = {{"m", lattice_json(x.m)}, {"quotient", qs_json}};
                }
            }
            if (format == "json") std::cout << out.dump(2) << "\n";
            else std::cout << text;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
