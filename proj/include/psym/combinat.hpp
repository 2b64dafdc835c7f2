#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psym/rational.hpp"

namespace psym {

// parts are positive; Partition is weakly decreasing, Composition is arbitrary order.
// The empty vector is the unique partition/composition of 0.
using Partition = std::vector<int>;
using Composition = std::vector<int>;

struct Block {
    int degree = 0;  // d >= 1
    int mult = 0;    // r >= 1
    long long size() const { return static_cast<long long>(degree) * mult; }
    friend bool operator==(const Block&, const Block&) = default;
};

// Ordered groups (multiplicity, composition); multiplicities strictly increasing,
// compositions nonempty. Seen as blocks, multiplicities are weakly increasing.
struct Polycomposition {
    std::vector<std::pair<int, Composition>> groups;

    long long size() const;
    int length() const;  // block count with repetition
    std::vector<Block> blocks() const;
    const Composition* group_at(int mult) const;

    friend bool operator==(const Polycomposition&, const Polycomposition&) = default;
};

// Multiset-of-blocks counterpart: each group's composition is sorted weakly decreasing.
struct TypeIndex {
    std::vector<std::pair<int, Partition>> groups;

    long long size() const;
    int length() const;
    std::vector<Block> blocks() const;
    const Partition* group_at(int mult) const;

    // grading + lexicographic on the flattened (mult, parts...) key
    std::vector<long long> order_key() const;
    bool operator<(const TypeIndex& o) const;
    friend bool operator==(const TypeIndex&, const TypeIndex&) = default;
};

enum class FamilyKind {
    par,
    com,
    pcom,
    typ,
    pcom_sqf,
    pcom_P,
    pcom_E,
    pcom_H,
    pcom_dyad,
    pcom_dyad_rows1,
    pcom_dyad_singular,
};

std::optional<FamilyKind> family_kind_from_string(const std::string& s);
std::string family_kind_to_string(FamilyKind k);

Partition sort_composition(const Composition& alpha);

TypeIndex psort(const Polycomposition& delta);

// Rebuild canonical objects from a bag of blocks.
TypeIndex type_from_blocks(std::vector<Block> blocks);
Polycomposition pcom_from_groups(std::vector<std::pair<int, Composition>> groups);

// Scale every multiplicity by r (the block d^m becomes d^{mr}).
TypeIndex type_power(const TypeIndex& tau, int r);
Polycomposition pcom_power(const Polycomposition& delta, int r);

// Multiset union of blocks.
TypeIndex type_union(const TypeIndex& a, const TypeIndex& b);

struct BlockStats {
    int length = 0;
    std::optional<long long> last_block_size;  // absent for the empty polycomposition
};
BlockStats block_stats(const Polycomposition& delta);
BlockStats block_stats(const TypeIndex& tau);

Int z_partition(const Partition& lambda);
Int Z_composition(const Composition& alpha);
Int z_tensor(const TypeIndex& tau);

std::vector<Partition> enum_partitions(int n);    // lexicographically increasing
std::vector<Composition> enum_compositions(int n);
std::vector<TypeIndex> enum_types(int n);         // sorted by TypeIndex order
std::vector<Polycomposition> enum_pcom_family(FamilyKind kind, int n);

bool pcom_family_contains(FamilyKind kind, const Polycomposition& delta);

int count_distinct_parts(const Partition& lambda);

}  // namespace psym
