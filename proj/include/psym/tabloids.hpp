#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psym/combinat.hpp"
#include "psym/expansions.hpp"
#include "psym/rational.hpp"

namespace psym {

enum class BrickKind { plain, doubled, dyadic };

struct Brick {
    int factor = 1;  // tensor factor (the row's multiplicity)
    int row = 0;     // row index within that factor's diagram
    int start = 0;   // leftmost spanned column
    int len = 0;     // spanned cells
    BrickKind kind = BrickKind::plain;
    int label = 0;  // >= 1 in ordered families
    int kmark = 0;  // the k of a k-brick

    Block content_block() const;
    friend bool operator==(const Brick&, const Brick&) = default;
};

enum class TabloidFamily {
    simple,
    osimp,
    doub,
    doub_E,
    doub_H,
    odoub,
    dyad,
    dyad_distinct,
    dyad_singular,
    brick,          // single-factor alias of simple
    ordered_brick,  // single-factor alias of osimp
};

std::optional<TabloidFamily> tabloid_family_from_string(const std::string& s);
std::string tabloid_family_to_string(TabloidFamily f);

struct Tabloid {
    TypeIndex shape;
    TabloidFamily family = TabloidFamily::simple;
    std::vector<Brick> bricks;  // sorted by (factor, row, start)

    TypeIndex content() const;
    friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

struct TabloidWeights {
    int l1 = 0;  // plain bricks
    int l2 = 0;  // doublebricks
    Int end_product = 1;                 // product of lengths of each row's last brick
    std::optional<Int> end_product_dyadic;  // same, defined when every brick is dyadic
};

std::vector<Tabloid> enum_tabloids(TabloidFamily family, const TypeIndex& sigma,
                                   const TypeIndex& tau);

TabloidWeights tabloid_weights(const Tabloid& t);

// The coefficient of G_tau in F_sigma, recomputed from tilings alone.
Rat coefficient_via_tabloids(Basis f, Basis g, const TypeIndex& sigma, const TypeIndex& tau);

// Compares every tabloid-derived coefficient at size n against the
// expansion-derived transition matrices.
CheckReport crosscheck_matrices(int n);

}  // namespace psym
