#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psym/combinat.hpp"
#include "psym/monomials.hpp"
#include "psym/rational.hpp"

namespace psym {

// G-expansion of F_d indexed by polycompositions.
struct PcomExpansion {
    Basis from, to;
    int degree = 0;
    std::vector<std::pair<Polycomposition, Rat>> terms;
};

// G-expansion of F_sigma indexed by types (psort fibers summed, zeros dropped).
struct TypeExpansion {
    Basis from, to;
    TypeIndex source;
    std::map<TypeIndex, Rat> terms;
};

PcomExpansion expand_elementary(Basis f, Basis g, int d);
TypeExpansion collect_types(const PcomExpansion& e);
TypeExpansion expand_type_element(Basis f, Basis g, const TypeIndex& sigma);

// Column sigma holds the g-expansion of f_sigma; both axes run over Typ(n)
// in the order of `types`.
struct TransitionMatrix {
    Basis from, to;
    int n = 0;
    std::vector<TypeIndex> types;
    std::vector<std::vector<Rat>> entries;  // entries[row][col]

    const Rat& at(const TypeIndex& row, const TypeIndex& col) const;
};

TransitionMatrix transition_matrix(Basis f, Basis g, int n);
TransitionMatrix matrix_product(const TransitionMatrix& a, const TransitionMatrix& b);
bool is_identity(const TransitionMatrix& m);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Pairwise inverse products, diagonality of the P-basis H<->E conjugation,
// and equality of the H<->E matrices.
CheckReport matrix_checks(int n);

struct OracleResult {
    bool ok = true;
    std::string identity;
    int degree = 0;
    int max_label = 0;
    std::optional<Monomial> witness;
    Rat lhs, rhs;  // coefficients of the witness on each side
};

// Identity tags: the twelve expansion names ("H_in_E", ..., "P_in_Eplus")
// plus the recursions "HE_conv", "dH", "dE", "HU", "UF".
const std::vector<std::string>& all_identity_tags();
OracleResult oracle_verify(const std::string& tag, int d, int max_label);

// Both monomial sides of an identity, for harness reuse.
std::pair<MonomialSum, MonomialSum> oracle_sides(const std::string& tag, int d, int max_label);

}  // namespace psym
