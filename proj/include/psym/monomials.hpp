#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psym/combinat.hpp"
#include "psym/rational.hpp"

namespace psym {

// Exponent vector on the doubly-indexed variables x_{i,j}; x_{i,j} has degree i.
// Entries are sorted (i, j, exp) triples with exp >= 1.
struct Monomial {
    std::vector<std::array<int, 3>> vars;

    long long degree() const;
    int total_exponent() const;
    int sign() const { return total_exponent() % 2 == 0 ? 1 : -1; }
    bool square_free() const;
    int max_label() const;

    Monomial times(const Monomial& o) const;
    Monomial adams(int r) const;

    std::string to_string() const;  // e.g. "x(3,1)^2.x(1,2)"
    auto operator<=>(const Monomial&) const = default;
};

struct MonomialSum {
    std::map<Monomial, Rat> terms;  // no zero coefficients stored

    void add_term(const Monomial& m, const Rat& c);
    MonomialSum plus(const MonomialSum& o) const;
    MonomialSum times(const MonomialSum& o) const;
    MonomialSum scaled(const Rat& c) const;
    MonomialSum adams(int r) const;
    MonomialSum restrict_labels(int max_label) const;  // substitute x_{i,j} = 0 for j > max_label

    static MonomialSum one();
    static MonomialSum zero() { return {}; }
    friend bool operator==(const MonomialSum&, const MonomialSum&) = default;
};

// A bar is a constant-labeled row; a tableau is a stack of bars with weakly
// decreasing lengths. The optional mark singles out one cell.
struct Bar {
    int len = 0;
    int label = 0;
    auto operator<=>(const Bar&) const = default;
};

struct BarTableau {
    std::vector<Bar> rows;
    std::optional<std::pair<int, int>> mark;  // (row, column), 0-based

    int cells() const;
    bool empty() const { return rows.empty(); }
    bool is_weak() const;         // weakly increasing labels within equal lengths
    bool is_strict() const;       // strictly increasing labels within equal lengths
    bool is_rectangular() const;  // all bars identical
    std::string to_string() const;
    auto operator<=>(const BarTableau&) const = default;
};

// Layered array of tableaux; layer indices ascend, empty layers omitted.
// Scanning order: layers in increasing order, left to right, top to bottom.
struct PolyBarTableau {
    std::vector<std::pair<int, std::vector<BarTableau>>> layers;

    int tableau_count() const;
    int bar_count() const;
    Polycomposition shape() const;
    std::string to_string() const;
    auto operator<=>(const PolyBarTableau&) const = default;
};

enum class BarTableauKind { wbt, sbt, rbt_marked };

std::vector<BarTableau> enum_bar_tableaux(BarTableauKind kind, int d, int max_label);

Monomial tableau_monomial(const BarTableau& t);
Monomial tableau_monomial(const PolyBarTableau& t);

enum class Basis { H, E, Eplus, P };
std::optional<Basis> basis_from_string(const std::string& s);
std::string basis_to_string(Basis b);

// Truncated monomial expansion of the degree-d generator, labels <= max_label.
MonomialSum basis_monomials(Basis f, int d, int max_label);

MonomialSum adams_pow(const MonomialSum& s, int r);

// Product over the blocks d^r of delta of basis_monomials(f, d, .) with all
// exponents scaled by r.
MonomialSum expand_over_pcom(Basis f, const Polycomposition& delta, int max_label);

// Canonical tableau assembled from a bag of bars (weak ordering).
BarTableau tableau_from_bars(std::vector<Bar> bars);

}  // namespace psym
