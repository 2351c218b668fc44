#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "modhom/syntax.hpp"
#include "support.hpp"

using namespace modhom;
using namespace testing;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(s);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("monomial text") {
    const ModulusPair p(2, 1, {1, 2});
    CHECK(to_string(p.one()) == "1");
    CHECK(to_string(p.x(0, -2) * p.y(0)) == "x1^-2*y1");
    CHECK(to_string(p.x(1, 3)) == "x2^3");
    CHECK(parse_monomial(p, "x1^-2*y1") == p.x(0, -2) * p.y(0));
    CHECK(parse_monomial(p, " 1 ") == p.one());
    CHECK(parse_monomial(p, "x2*x2") == p.x(1, 2));
    CHECK_THROWS_AS(parse_monomial(p, "x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(p, "y0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(p, "z1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(p, "x1^"), std::invalid_argument);
}

TEST_CASE("form text") {
    const ModulusPair p(1, 2, {2});
    CHECK(to_string(LogForm::single(p, FormTerm{p.x(0, -1), {0}, {1}})) == "x1^-1*dlogx1*dy2");
    CHECK(to_string(LogForm::single(p, FormTerm{p.one(), {0}, {}}, -1)) == "(-1)*dlogx1");
    CHECK(to_string(LogForm::function(p, p.one())) == "1");
    CHECK(to_string(LogForm(p, 1)) == "0");
}

TEST_CASE("chain text") {
    const ModulusPair p(1, 1, {2});
    ChainElement c(p, 1);
    c.add({p.x(0, -1), p.x(0, 2)}, Rational(-1, 2));
    c.add({p.y(0), p.one()}, 1);
    const std::string text = to_string(c);
    CHECK(text.find("(-1/2)*x1^-1 (x) x1^2") != std::string::npos);
    CHECK(text.find("y1 (x) 1") != std::string::npos);
    CHECK(parse_chain(p, text) == c);
    CHECK(parse_chain(p, "-x1^-1 (x) x1") == ChainElement::single(p, {p.x(0, -1), p.x(0)}, -1));
    CHECK(parse_chain(p, "3*y1 (x) 1 + 1 (x) y1") ==
          ChainElement::single(p, {p.y(0), p.one()}, 3) + ChainElement::single(p, {p.one(), p.y(0)}));
    CHECK(to_string(ChainElement(p, 2)) == "0");
    CHECK_THROWS_AS(parse_chain(p, "x1 (x) x1 + x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_chain(p, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_chain(p, "(1/0)*x1"), std::invalid_argument);
}

TEST_CASE("chain text round trips") {
    for (int trial = 0; trial < 500; ++trial) {
        const ModulusPair p = rand_pair();
        const ChainElement c = rand_chain(p, static_cast<std::size_t>(pick(0, 3)));
        if (c.is_zero()) continue;
        CHECK(parse_chain(p, to_string(c)) == c);
    }
}

TEST_CASE("flag value parsers") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4") == 4);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK(parse_int_list("-1,2") == std::vector<int>{-1, 2});
    CHECK(parse_int_list("3") == std::vector<int>{3});
    CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
    CHECK(parse_range("0..6") == std::pair<long, long>{0, 6});
    CHECK(parse_range("-2..-1") == std::pair<long, long>{-2, -1});
    CHECK(parse_range("4") == std::pair<long, long>{4, 4});
    CHECK_THROWS_AS(parse_range("3..1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("1..x"), std::invalid_argument);
    const ModulusPair p(1, 1, {2});
    CHECK(parse_multidegree(p, "-1,1") == Multidegree{{-1}, {1}});
    CHECK_THROWS_AS(parse_multidegree(p, "-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multidegree(p, "0,-1"), std::invalid_argument);
}

TEST_CASE("report JSON shape") {
    DimensionReport r{ModulusPair(1, 0, {2}), Multidegree{{-1}, {}}, "HP", {{0, 0}, {1, 0}}, {}};
    CHECK(to_json(r).dump() == R"({"pair":{"s":1,"t":0,"r":[2]},"deg":[-1],"variant":"HP","dims":{"0":0,"1":0}})");
    r.oracle = {{0, 0}, {1, 0}};
    const auto j = to_json(r);
    CHECK(j["oracle"]["1"] == 0);
    CHECK(j["match"] == true);
    r.oracle[1] = 3;
    CHECK(to_json(r)["match"] == false);
}

TEST_CASE("CSV and JSON carry the same data") {
    const ModulusPair p(2, 1, {2, 1});
    const auto reports = cyclic_table(p, multidegree_window(p, -1, 1, 0, 1), CyclicVariant::HC, 0, 4, true);
    const auto json = to_json(reports);
    const auto lines = split(to_csv(reports), '\n');
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "s,t,r,deg,variant,n,dim,oracle,match");
    std::size_t row = 1;
    for (const auto& rep : json) {
        for (const auto& [n, v] : rep["dims"].items()) {
            REQUIRE(row < lines.size());
            const auto cells = split(lines[row++], ',');
            REQUIRE(cells.size() == 9);
            CHECK(cells[0] == "2");
            CHECK(cells[2] == "2;1");
            std::string deg;
            for (const auto& d : rep["deg"]) deg += (deg.empty() ? "" : ";") + std::to_string(d.get<int>());
            CHECK(cells[3] == deg);
            CHECK(cells[4] == "HC");
            CHECK(cells[5] == n);
            CHECK(cells[6] == std::to_string(v.get<std::size_t>()));
            CHECK(cells[7] == std::to_string(rep["oracle"][n].get<std::size_t>()));
            CHECK(cells[8] == "true");
        }
    }
    CHECK(row == lines.size());
}
