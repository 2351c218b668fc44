#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace modhom;
using namespace testing;

namespace {

Monomial mono(std::vector<int> i, std::vector<int> k = {}) { return Monomial{std::move(i), std::move(k)}; }

}  // namespace

TEST_CASE("pair construction") {
    const ModulusPair p(2, 1, {3, 1});
    CHECK(p.s() == 2);
    CHECK(p.t() == 1);
    CHECK(p.mo_bound(0) == -2);
    CHECK(p.mo_bound(1) == 0);
    CHECK_FALSE(p.reduced());
    CHECK(ModulusPair(2, 0, {1, 1}).reduced());
    CHECK_THROWS_AS(ModulusPair(2, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ModulusPair(1, 0, {0}), std::invalid_argument);
    CHECK(p.x(1, -2) == mono({0, -2}, {0}));
    CHECK(p.y(0) == mono({0, 0}, {1}));
}

TEST_CASE("in_ring examples") {
    const ModulusPair p10(1, 0, {1});
    CHECK(in_ring(p10, mono({1})));
    CHECK_FALSE(in_ring(p10, mono({-1})));
    CHECK(in_ring(ModulusPair(2, 1, {1, 1}), mono({0, 3}, {1})));
    CHECK_THROWS_AS(in_ring(p10, mono({1, 2})), std::invalid_argument);
}

TEST_CASE("unit monomials") {
    CHECK(is_unit_monomial(ModulusPair(1, 0, {1}), mono({-2})));
    CHECK_FALSE(is_unit_monomial(ModulusPair(0, 1, {}), mono({}, {1})));
    CHECK(is_unit_monomial(ModulusPair(2, 0, {1, 1}), mono({1, -1})));
}

TEST_CASE("in_MO examples") {
    CHECK(in_MO(ModulusPair(1, 0, {2}), mono({-1})));
    CHECK_FALSE(in_MO(ModulusPair(1, 0, {1}), mono({-1})));
    CHECK(in_MO(ModulusPair(2, 0, {3, 1}), mono({-2, 0})));
    CHECK_FALSE(in_MO(ModulusPair(2, 0, {3, 1}), mono({-3, 0})));
    CHECK_FALSE(in_MO(ModulusPair(1, 1, {2}), mono({0}, {-1})));
}

TEST_CASE("multidegrees") {
    const ModulusPair p(1, 1, {1});
    CHECK(multidegree_of(mono({2}, {0})) == Multidegree{{2}, {0}});
    CHECK(multidegree_of(mono({-1}, {3})) == Multidegree{{-1}, {3}});
    CHECK(multidegree_of(p.one()) == Multidegree{{0}, {0}});
    CHECK(to_string(Multidegree{{-1}, {3}}) == "(-1;3)");
    CHECK(Multidegree{{1}, {2}} + Multidegree{{-3}, {1}} == Multidegree{{-2}, {3}});
}

TEST_CASE("membership properties on random monomials") {
    for (int trial = 0; trial < 2000; ++trial) {
        const ModulusPair p = rand_pair();
        const Monomial a = rand_monomial(p);
        const Monomial b = rand_monomial(p);
        if (in_ring(p, a)) CHECK(in_localization(p, a));
        if (in_ring(p, a) && in_ring(p, b)) CHECK(in_ring(p, a * b));
        if (in_MO(p, a) && in_ring(p, b)) CHECK(in_MO(p, a * b));
        CHECK(multidegree_of(a * b) == multidegree_of(a) + multidegree_of(b));

        std::vector<int> bigger = p.r();
        for (auto& v : bigger) v += pick(0, 2);
        if (in_MO(p, a)) CHECK(in_MO(ModulusPair(p.s(), p.t(), bigger), a));

        const ModulusPair reduced(p.s(), p.t(), std::vector<int>(p.s(), 1));
        CHECK(in_MO(reduced, a) == in_ring(reduced, a));
    }
}
