#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psym/monomials.hpp"
#include "psym/notation.hpp"

using namespace psym;

namespace {
Monomial mono(std::vector<std::array<int, 3>> vars) {
    Monomial m;
    m.vars = std::move(vars);
    std::sort(m.vars.begin(), m.vars.end());
    return m;
}
}  // namespace

TEST_CASE("tableau monomials") {
    // lengths 4,4,4,3,3,2,2 with labels 2,2,2,1,2,4,4
    BarTableau t{{{4, 2}, {4, 2}, {4, 2}, {3, 1}, {3, 2}, {2, 4}, {2, 4}}, std::nullopt};
    CHECK(t.is_weak());
    CHECK(tableau_monomial(t) == mono({{4, 2, 3}, {3, 1, 1}, {3, 2, 1}, {2, 4, 2}}));

    BarTableau s{{{4, 2}, {4, 3}, {2, 5}, {2, 7}, {1, 1}, {1, 3}}, std::nullopt};
    CHECK(s.is_strict());
    CHECK(tableau_monomial(s) ==
          mono({{4, 2, 1}, {4, 3, 1}, {2, 5, 1}, {2, 7, 1}, {1, 1, 1}, {1, 3, 1}}));

    CHECK(tableau_monomial(BarTableau{}) == Monomial{});
}

TEST_CASE("layered monomial with per-layer powers") {
    PolyBarTableau p;
    p.layers = {{1, {BarTableau{{{2, 1}, {1, 3}}, std::nullopt}}},
                {4, {BarTableau{{{1, 1}}, std::nullopt}}}};
    // (x_{2,1} x_{1,3}) * (x_{1,1})^4
    CHECK(tableau_monomial(p) == mono({{2, 1, 1}, {1, 3, 1}, {1, 1, 4}}));
}

TEST_CASE("bar tableau enumeration") {
    auto w = enum_bar_tableaux(BarTableauKind::wbt, 2, 1);
    CHECK(w.size() == 2);  // one 2-bar, or two 1-bars

    for (int J = 1; J <= 3; ++J)
        CHECK(enum_bar_tableaux(BarTableauKind::rbt_marked, 4, J).size() == 7 * J);

    CHECK(enum_bar_tableaux(BarTableauKind::sbt, 0, 3).size() == 1);
    CHECK(enum_bar_tableaux(BarTableauKind::rbt_marked, 0, 3).empty());

    // weak tableaux of size d biject with degree-d monomials
    for (int d = 1; d <= 5; ++d) {
        auto tabs = enum_bar_tableaux(BarTableauKind::wbt, d, d);
        CHECK(tabs.size() == basis_monomials(Basis::H, d, d).terms.size());
        for (const auto& t : tabs) {
            CHECK(t.is_weak());
            CHECK(t.cells() == d);
        }
    }
}

TEST_CASE("power sum generators") {
    MonomialSum p6 = basis_monomials(Basis::P, 6, 1);
    MonomialSum expect;
    expect.add_term(mono({{6, 1, 1}}), 6);
    expect.add_term(mono({{3, 1, 2}}), 3);
    expect.add_term(mono({{2, 1, 3}}), 2);
    expect.add_term(mono({{1, 1, 6}}), 1);
    CHECK(p6 == expect);
}

TEST_CASE("signed elementary terms") {
    MonomialSum e3 = basis_monomials(Basis::E, 3, 3);
    CHECK(e3.terms.at(mono({{3, 1, 1}})) == -1);
    CHECK(e3.terms.at(mono({{2, 1, 1}, {1, 1, 1}})) == 1);
    CHECK(e3.terms.at(mono({{1, 1, 1}, {1, 2, 1}, {1, 3, 1}})) == -1);
    CHECK(basis_monomials(Basis::H, 0, 3) == MonomialSum::one());
    // support matches the unsigned version, signs by bar count
    MonomialSum ep3 = basis_monomials(Basis::Eplus, 3, 3);
    REQUIRE(e3.terms.size() == ep3.terms.size());
    for (const auto& [m, c] : ep3.terms) {
        CHECK(c == 1);
        CHECK(abs(e3.terms.at(m)) == 1);
        CHECK(e3.terms.at(m) == Rat(m.sign()));
    }
}

TEST_CASE("grading") {
    for (Basis b : {Basis::H, Basis::E, Basis::Eplus, Basis::P})
        for (int d = 1; d <= 5; ++d)
            for (const auto& [m, c] : basis_monomials(b, d, d).terms) CHECK(m.degree() == d);
}

TEST_CASE("adams operation") {
    MonomialSum h3 = basis_monomials(Basis::H, 3, 2);
    MonomialSum h3_7 = adams_pow(h3, 7);
    CHECK(h3_7.terms.contains(mono({{3, 1, 7}})));
    CHECK(h3_7.terms.contains(mono({{2, 1, 7}, {1, 1, 7}})));
    CHECK(h3_7.terms.contains(mono({{1, 1, 21}})));
    CHECK(h3_7.terms.contains(mono({{1, 1, 14}, {1, 2, 7}})));
    CHECK(adams_pow(h3, 1) == h3);

    MonomialSum e1_sq = adams_pow(basis_monomials(Basis::E, 1, 2), 2);
    MonomialSum expect;
    expect.add_term(mono({{1, 1, 2}}), -1);
    expect.add_term(mono({{1, 2, 2}}), -1);
    CHECK(e1_sq == expect);

    // composition of substitutions
    for (Basis b : {Basis::H, Basis::E})
        CHECK(adams_pow(adams_pow(basis_monomials(b, 3, 3), 2), 3) ==
              adams_pow(basis_monomials(b, 3, 3), 6));
}

TEST_CASE("expansion over a polycomposition multiplies blockwise") {
    Polycomposition d = parse_pcom("(3,2)^1(2,1)^3");
    MonomialSum lhs = expand_over_pcom(Basis::H, d, 3);
    MonomialSum rhs = basis_monomials(Basis::H, 3, 3)
                          .times(basis_monomials(Basis::H, 2, 3))
                          .times(adams_pow(basis_monomials(Basis::H, 2, 3), 3))
                          .times(adams_pow(basis_monomials(Basis::H, 1, 3), 3));
    CHECK(lhs == rhs);
    CHECK(expand_over_pcom(Basis::P, Polycomposition{}, 4) == MonomialSum::one());

    MonomialSum sq = expand_over_pcom(Basis::E, parse_pcom("(1,1)^1"), 2);
    MonomialSum expect;
    expect.add_term(mono({{1, 1, 2}}), 1);
    expect.add_term(mono({{1, 1, 1}, {1, 2, 1}}), 2);
    expect.add_term(mono({{1, 2, 2}}), 1);
    CHECK(sq == expect);
}

TEST_CASE("label truncation is a ring map") {
    for (Basis b : {Basis::H, Basis::E, Basis::Eplus, Basis::P})
        for (int d = 1; d <= 5; ++d)
            for (int Jp = 1; Jp < d; ++Jp)
                CHECK(basis_monomials(b, d, d).restrict_labels(Jp) == basis_monomials(b, d, Jp));
}

TEST_CASE("power sum coefficients name the bar length") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& [m, c] : basis_monomials(Basis::P, d, 3).terms) {
            REQUIRE(m.vars.size() == 1);
            CHECK(c == m.vars[0][0]);
            CHECK(d % m.vars[0][0] == 0);
        }
}
