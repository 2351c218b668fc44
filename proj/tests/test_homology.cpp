#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modhom/homology.hpp"
#include "support.hpp"

using namespace modhom;
using namespace testing;

namespace {

Multidegree md(std::vector<int> dx, std::vector<int> dy = {}) { return Multidegree{std::move(dx), std::move(dy)}; }

Multidegree rand_deg(const ModulusPair& p) {
    Multidegree d{std::vector<int>(p.s()), std::vector<int>(p.t())};
    for (auto& v : d.dx) v = pick(-3, 3);
    for (auto& v : d.dy) v = pick(0, 3);
    return d;
}

void same_reports(const std::vector<DimensionReport>& a, const std::vector<DimensionReport>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].deg == b[i].deg);
        CHECK(a[i].variant == b[i].variant);
        CHECK(a[i].dims == b[i].dims);
        CHECK(a[i].oracle == b[i].oracle);
    }
}

}  // namespace

TEST_CASE("forms complex examples") {
    const ModulusPair p1(1, 0, {1});
    const GradedComplex c0 = build_forms_complex(p1, md({0}));
    CHECK(c0.dim(0) == 1);
    CHECK(c0.dim(1) == 1);
    CHECK(c0.differential[0].get(0, 0) == 0);
    for (int d = 1; d <= 4; ++d) CHECK(build_forms_complex(p1, md({d})).differential[0].get(0, 0) == d);
    const GradedComplex c2 = build_forms_complex(ModulusPair(1, 0, {2}), md({-1}));
    CHECK(c2.differential[0].get(0, 0) == -1);
    CHECK(build_forms_complex(p1, md({-1})).dim(0) == 0);
    CHECK_THROWS_AS(build_forms_complex(ModulusPair(0, 1, {}), md({}, {-1})), std::invalid_argument);
}

TEST_CASE("de Rham cohomology examples") {
    const auto h = [](const ModulusPair& p, const Multidegree& d) { return de_rham_cohomology(p, d).dims; };
    CHECK(h(ModulusPair(1, 0, {1}), md({0})) == std::map<long, std::size_t>{{0, 1}, {1, 1}});
    CHECK(h(ModulusPair(1, 0, {1}), md({1})) == std::map<long, std::size_t>{{0, 0}, {1, 0}});
    CHECK(h(ModulusPair(1, 0, {2}), md({-1})) == std::map<long, std::size_t>{{0, 0}, {1, 0}});
    CHECK(de_rham_cohomology(ModulusPair(1, 0, {1}), md({0})).variant == "deRham");
}

TEST_CASE("Hochschild dimension examples") {
    CHECK(hh_dimension(ModulusPair(1, 1, {2}), md({-1}, {1}), 1) == 2);
    CHECK(hh_dimension(ModulusPair(0, 1, {}), md({}, {1}), 1) == 1);
    CHECK(hh_dimension(ModulusPair(1, 1, {2}), md({-1}, {1}), 3) == 0);
}

TEST_CASE("degree-zero Hochschild dimension counts MO monomials") {
    for (int trial = 0; trial < 300; ++trial) {
        const ModulusPair p = rand_pair();
        const Multidegree d = rand_deg(p);
        const Monomial m{d.dx, d.dy};
        CHECK(hh_dimension(p, d, 0) == (in_MO(p, m) ? 1u : 0u));
        CHECK(hh_dimension(p, d, p.s() + p.t() + 1) == 0);
    }
}

TEST_CASE("cyclic formula examples") {
    const ModulusPair k(0, 0, {});
    for (long n = 0; n <= 8; ++n) CHECK(cyclic_dims_formula(k, md({}), CyclicVariant::HC, n) == (n % 2 == 0 ? 1u : 0u));
    const ModulusPair p(1, 0, {1});
    for (long n = 0; n <= 8; ++n) {
        CHECK(cyclic_dims_formula(p, md({0}), CyclicVariant::HP, n) == 1);
        CHECK(cyclic_dims_formula(p, md({5}), CyclicVariant::HP, n) == 0);
    }
}

TEST_CASE("variant names") {
    CHECK(std::string(to_string(CyclicVariant::HC_MINUS)) == "HC-");
    CHECK(parse_variant("hcminus") == CyclicVariant::HC_MINUS);
    CHECK(parse_variant("HP") == CyclicVariant::HP);
    CHECK(parse_variant("hc") == CyclicVariant::HC);
    CHECK_FALSE(parse_variant("hh").has_value());
}

TEST_CASE("bicomplex oracle examples") {
    const auto agree = [](const ModulusPair& p, const Multidegree& d, long n_hi) {
        for (CyclicVariant v : {CyclicVariant::HC, CyclicVariant::HC_MINUS, CyclicVariant::HP})
            for (long n = 0; n <= n_hi; ++n) CHECK(cyclic_dims_formula(p, d, v, n) == cyclic_dims_bicomplex(p, d, v, n));
    };
    agree(ModulusPair(0, 0, {}), md({}), 8);
    agree(ModulusPair(1, 0, {1}), md({0}), 8);
    agree(ModulusPair(1, 1, {2}), md({-1}, {1}), 6);
}

TEST_CASE("formula and bicomplex agree on random cells") {
    for (int trial = 0; trial < 150; ++trial) {
        const ModulusPair p = rand_pair(2, 1);
        const Multidegree d = rand_deg(p);
        const GradedComplex c = build_forms_complex(p, d);
        const ComplexRanks ranks(c);
        for (CyclicVariant v : {CyclicVariant::HC, CyclicVariant::HC_MINUS, CyclicVariant::HP})
            for (long n = 0; n <= 6; ++n) CHECK(cyclic_dims_formula(ranks, v, n) == cyclic_dims_bicomplex(c, v, n));
    }
}

TEST_CASE("complex invariants") {
    for (int trial = 0; trial < 200; ++trial) {
        const ModulusPair p = rand_pair();
        const Multidegree d = rand_deg(p);
        const GradedComplex c = build_forms_complex(p, d);
        const ComplexRanks ranks(c);
        long euler_dims = 0, euler_h = 0;
        for (long q = 0; q <= static_cast<long>(c.top()); ++q) {
            CHECK(c.dim(q) == basis_of(p, FormClass::M_OMEGA, static_cast<std::size_t>(q), d).size());
            const std::size_t kernel = c.dim(q) - c.rank_d(q);
            CHECK(kernel + c.rank_d(q) == c.dim(q));
            CHECK(ranks.cohomology(q) == kernel - c.rank_d(q - 1));
            CHECK(c.differential[static_cast<std::size_t>(q)].cols() == c.dim(q));
            const long sign = q % 2 == 0 ? 1 : -1;
            euler_dims += sign * static_cast<long>(c.dim(q));
            euler_h += sign * static_cast<long>(ranks.cohomology(q));
        }
        CHECK(euler_dims == euler_h);
        CHECK(ranks.cohomology(-1) == 0);
        CHECK(ranks.cohomology(static_cast<long>(c.top()) + 1) == 0);
        for (long n = 0; n <= 6; ++n)
            CHECK(cyclic_dims_formula(ranks, CyclicVariant::HP, n) == cyclic_dims_formula(ranks, CyclicVariant::HP, n + 2));
    }
}

TEST_CASE("log-pole complex of the line is acyclic away from degree zero") {
    const ModulusPair p(1, 0, {1});
    for (int d = 1; d <= 8; ++d)
        for (const auto& [q, h] : de_rham_cohomology(p, md({d})).dims) CHECK(h == 0);
    const ModulusPair p2(2, 0, {1, 1});
    for (const Multidegree& d : multidegree_window(p2, 1, 3, 0, 0))
        for (const auto& [q, h] : de_rham_cohomology(p2, d).dims) CHECK(h == 0);
}

TEST_CASE("multidegree window") {
    const ModulusPair p(1, 1, {1});
    const auto w = multidegree_window(p, -1, 0, 0, 1);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == md({-1}, {0}));
    CHECK(w[1] == md({-1}, {1}));
    CHECK(w[3] == md({0}, {1}));
    CHECK(multidegree_window(ModulusPair(0, 0, {}), -3, 3, 0, 3).size() == 1);
    CHECK_THROWS_AS(multidegree_window(p, 0, 0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(multidegree_window(p, 1, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("parallel tables equal the serial reference") {
    const ModulusPair p(2, 1, {2, 1});
    const auto degs = multidegree_window(p, -2, 2, 0, 2);
    for (int threads : {1, 2, 4}) {
        set_worker_count(threads);
        for (CyclicVariant v : {CyclicVariant::HC, CyclicVariant::HC_MINUS, CyclicVariant::HP})
            same_reports(cyclic_table(p, degs, v, 0, 6, true, Execution::Parallel),
                         cyclic_table(p, degs, v, 0, 6, true, Execution::Serial));
        same_reports(hh_table(p, FormClass::M_OMEGA, degs, {0, 1, 2, 3}, Execution::Parallel),
                     hh_table(p, FormClass::M_OMEGA, degs, {0, 1, 2, 3}, Execution::Serial));
        same_reports(cohomology_table(p, degs, Execution::Parallel), cohomology_table(p, degs, Execution::Serial));
    }
    set_worker_count(0);
}

TEST_CASE("tensor windows") {
    const ModulusPair p(1, 0, {1});
    const auto w = tensors_in_window(p, 2, md({1}), 1, 100);
    CHECK(w.size() == 4);
    for (const Tensor& t : w) {
        CHECK(multidegree_of(t) == md({1}));
        for (const Monomial& m : t) CHECK(m.i[0] >= -1);
    }
    CHECK_THROWS_AS(tensors_in_window(p, 2, md({1}), 1, 3), std::length_error);
    const ModulusPair q(1, 1, {2});
    for (const Tensor& t : tensors_in_window(q, 3, md({0}, {2}), 2, 10000)) CHECK(multidegree_of(t) == md({0}, {2}));
    // x-exponents: compositions of 0 + 6 into 3 parts (28); y: compositions of 2 into 3 parts (6).
    CHECK(tensors_in_window(q, 3, md({0}, {2}), 2, 10000).size() == 28 * 6);
}

TEST_CASE("probe confirms images of eps with a zero witness") {
    for (int trial = 0; trial < 30; ++trial) {
        const ModulusPair p = rand_pair(2, 1);
        const std::size_t q = static_cast<std::size_t>(pick(0, static_cast<int>(p.s() + p.t())));
        const LogForm w = restrict_to(rand_form(p, q, 2, -2, 2), FormClass::M_OMEGA);
        const ProbeResult r = hkr_cycle_probe(p, hkr_eps(w), 2);
        CHECK(r.status == ProbeStatus::Confirmed);
        CHECK(r.pole_bound_used == 0);
        REQUIRE(r.witness);
        CHECK(r.witness->is_zero());
    }
}

TEST_CASE("probe confirms boundaries plus eps images") {
    for (int trial = 0; trial < 40; ++trial) {
        const ModulusPair p = rand_pair(1, 1);
        if (p.s() + p.t() == 0) continue;
        const ChainElement u = rand_class_chain(p, 2, ChainClass::M_HH, 1);
        const LogForm w = restrict_to(rand_form(p, 1, 1, -1, 1), FormClass::M_OMEGA);
        const ChainElement z = hochschild_b(u) + hkr_eps(w);
        const ProbeResult r = hkr_cycle_probe(p, z, 3);
        CHECK(r.status == ProbeStatus::Confirmed);
        REQUIRE(r.witness);
        CHECK(hochschild_b(*r.witness) == z - hkr_eps(hkr_e(z)));
    }
}

TEST_CASE("probe preconditions and truncation") {
    const ModulusPair p(1, 0, {1});
    const ChainElement full = ChainElement::single(p, {p.x(0, -1), p.one()});
    CHECK_THROWS_AS(hkr_cycle_probe(p, full, 2), std::invalid_argument);
    const ChainElement cycle = ChainElement::single(p, {p.one(), p.x(0)});
    CHECK_NOTHROW(hkr_cycle_probe(p, cycle, 1));
    const ChainElement not_closed = ChainElement::single(p, {p.x(0), p.x(0), p.one()});
    CHECK_THROWS_AS(hkr_cycle_probe(p, not_closed, 2), std::invalid_argument);
    CHECK_THROWS_AS(hkr_cycle_probe(ModulusPair(1, 0, {2}), cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(hkr_cycle_probe(p, cycle, -1), std::invalid_argument);

    const ChainElement u = ChainElement::single(p, {p.x(0), p.x(0), p.x(0)});
    const ChainElement z = hochschild_b(ChainElement::single(p, {p.one(), p.x(0), p.x(0, 2)})) + hochschild_b(u);
    REQUIRE_FALSE(z.is_zero());
    const ProbeResult capped = hkr_cycle_probe(p, z, 2, ProbeLimits{1});
    CHECK(capped.status == ProbeStatus::Inconclusive);
    CHECK_FALSE(capped.witness);
    const ProbeResult full_run = hkr_cycle_probe(p, z, 2);
    CHECK(full_run.status == ProbeStatus::Confirmed);
}
