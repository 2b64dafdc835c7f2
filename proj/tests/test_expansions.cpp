#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "appendix_fixtures.hpp"
#include "psym/expansions.hpp"
#include "psym/notation.hpp"
#include "psym/oeis.hpp"

using namespace psym;

namespace {

std::map<TypeIndex, Rat> type_collected(Basis f, Basis g, int d) {
    return collect_types(expand_elementary(f, g, d)).terms;
}

}  // namespace

TEST_CASE("elementary expansions, size-4 columns") {
    auto he = type_collected(Basis::H, Basis::E, 4);
    CHECK(he.at(parse_type("(1,1,1,1)^1")) == 1);
    CHECK(he.at(parse_type("(2,1,1)^1")) == -3);
    CHECK(he.at(parse_type("(3,1)^1")) == 2);
    CHECK(he.at(parse_type("(2,2)^1")) == 1);
    CHECK(he.at(parse_type("(4)^1")) == -1);
    CHECK(he.size() == 5);

    CHECK(type_collected(Basis::H, Basis::P, 4).at(parse_type("(1,1,1,1)^1")) == Rat(1, 24));
    CHECK(type_collected(Basis::P, Basis::H, 4).at(parse_type("(3,1)^1")) == -4);

    auto epe = type_collected(Basis::Eplus, Basis::E, 4);
    CHECK(epe.at(parse_type("(2)^1(1)^2")) == -1);
    CHECK(epe.at(parse_type("(2)^2")) == 1);
    CHECK(epe.at(parse_type("(1,1,1,1)^1")) == 1);
    CHECK(epe.at(parse_type("(1,1)^1(1)^2")) == 1);
    CHECK(epe.at(parse_type("(2,1,1)^1")) == -3);
    CHECK(epe.at(parse_type("(3,1)^1")) == 2);
    CHECK(epe.at(parse_type("(2,2)^1")) == 1);
    CHECK(epe.at(parse_type("(4)^1")) == -1);

    // degree 0 expands to the empty type with coefficient 1
    for (Basis g : {Basis::E, Basis::P, Basis::Eplus}) {
        auto e = expand_elementary(Basis::H, g, 0);
        REQUIRE(e.terms.size() == 1);
        CHECK(e.terms[0].first == Polycomposition{});
        CHECK(e.terms[0].second == 1);
    }
    CHECK_THROWS(expand_elementary(Basis::H, Basis::H, 3));
}

TEST_CASE("psort fibers sum") {
    // three compositions collapse onto (2,1,1)^1
    auto raw = expand_elementary(Basis::H, Basis::E, 4);
    int fiber = 0;
    for (const auto& [delta, c] : raw.terms)
        if (psort(delta) == parse_type("(2,1,1)^1")) {
            ++fiber;
            CHECK(c == -1);
        }
    CHECK(fiber == 3);

    // 1/Z summed over a fiber gives 1/z
    auto hp3 = type_collected(Basis::H, Basis::P, 3);
    CHECK(hp3.at(parse_type("(2,1)^1")) == Rat(1) / Rat(z_partition({2, 1})));

    CHECK(collect_types(PcomExpansion{Basis::H, Basis::E, 0, {}}).terms.empty());
}

TEST_CASE("type-element expansion") {
    auto e1 = expand_type_element(Basis::E, Basis::H, parse_type("(3,2)^1(2,2)^2"));
    CHECK(e1.terms.at(parse_type("(2,1,1,1)^1(2,1,1)^2")) == -6);

    auto e2 = expand_type_element(Basis::P, Basis::H, parse_type("(3,3)^1(2,1)^2"));
    CHECK(e2.terms.at(parse_type("(3,2,1)^1(2,1)^2")) == -36);

    auto e3 = expand_type_element(Basis::H, Basis::E, parse_type("(3,1)^1"));
    CHECK(e3.terms.size() == 3);
    CHECK(e3.terms.at(parse_type("(1,1,1,1)^1")) == 1);
    CHECK(e3.terms.at(parse_type("(2,1,1)^1")) == -2);
    CHECK(e3.terms.at(parse_type("(3,1)^1")) == 1);
}

TEST_CASE("size-4 transition matrices match the reference grids") {
    auto types = enum_types(4);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < types.size(); ++i) index[render_expr(types[i])] = i;
    const auto& labels = fixtures::size4_labels();
    for (const auto& [pair, text] : fixtures::size4_matrices()) {
        TransitionMatrix m = transition_matrix(pair.first, pair.second, 4);
        auto grid = fixtures::parse_grid(text);
        REQUIRE(grid.size() == 11);
        for (size_t r = 0; r < 11; ++r) {
            REQUIRE(grid[r].size() == 11);
            for (size_t c = 0; c < 11; ++c) {
                INFO(basis_to_string(pair.first), "->", basis_to_string(pair.second), " row ",
                     labels[r], " col ", labels[c]);
                CHECK(m.entries[index.at(labels[r])][index.at(labels[c])] == grid[r][c]);
            }
        }
    }
}

TEST_CASE("degree-0 matrix is the 1x1 identity") {
    TransitionMatrix m = transition_matrix(Basis::H, Basis::E, 0);
    REQUIRE(m.types.size() == 1);
    CHECK(m.types[0] == TypeIndex{});
    CHECK(m.entries[0][0] == 1);
}

TEST_CASE("matrix checks") {
    for (int n = 0; n <= 4; ++n) {
        CheckReport rep = matrix_checks(n);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.ok);
    }
}

TEST_CASE("every nonzero entry lives in the right grading") {
    TransitionMatrix m = transition_matrix(Basis::E, Basis::Eplus, 5);
    for (size_t r = 0; r < m.types.size(); ++r)
        for (size_t c = 0; c < m.types.size(); ++c)
            if (m.entries[r][c] != 0) CHECK(m.types[r].size() == 5);
}

TEST_CASE("oracle accepts the true identities") {
    CHECK(oracle_verify("H_in_E", 3, 3).ok);
    CHECK(oracle_verify("H-in-E", 3, 3).ok);  // hyphen form
    CHECK(oracle_verify("HE_conv", 4, 4).ok);
    CHECK(oracle_verify("HE_conv", 0, 1).ok);
    for (const std::string& tag : all_identity_tags())
        for (int d = 0; d <= 4; ++d) {
            OracleResult res = oracle_verify(tag, d, d == 0 ? 1 : d);
            INFO(tag, " at degree ", d);
            CHECK(res.ok);
        }
}

TEST_CASE("oracle reports a witness for a perturbed expansion") {
    // flip one coefficient of the P-in-E+ expansion and evaluate both sides
    PcomExpansion e = expand_elementary(Basis::P, Basis::Eplus, 4);
    e.terms[0].second += 1;
    MonomialSum lhs = basis_monomials(Basis::P, 4, 4);
    MonomialSum rhs;
    for (const auto& [delta, c] : e.terms)
        rhs = rhs.plus(expand_over_pcom(Basis::Eplus, delta, 4).scaled(c));
    CHECK(!(lhs == rhs));
    CHECK(oracle_verify("P_in_Eplus", 4, 4).ok);
}

TEST_CASE("nonzero-term counts in a column match the sequence hooks") {
    for (int d = 0; d <= 6; ++d) {
        TransitionMatrix m = transition_matrix(Basis::Eplus, Basis::H, d);
        TypeIndex col = d == 0 ? TypeIndex{} : parse_type("(" + std::to_string(d) + ")^1");
        size_t ci = std::find(m.types.begin(), m.types.end(), col) - m.types.begin();
        int nonzero = 0;
        for (size_t r = 0; r < m.types.size(); ++r)
            if (m.entries[r][ci] != 0) ++nonzero;
        CHECK(nonzero == count_nonzero_types(Basis::Eplus, Basis::H, d));
    }
}
