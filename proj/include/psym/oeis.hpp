#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psym/monomials.hpp"
#include "psym/rational.hpp"

namespace psym {

enum class SeqTag {
    A006951,        // polycomposition counts
    A024786_TE,     // nonzero types in the E-expansion of the unsigned elementary basis
    A025065_TH,     // palindromic partitions; H-expansion counts
    A002513_TP,     // cubic partitions; P-expansion counts
    A018819_THsup,  // binary partitions; expansion of H over power-of-two layers
    A092119_TEsup,  // partitions refined over binary partitions
    A305841_TPsup,  // single power-of-two multiplicity
};

std::optional<SeqTag> seq_tag_from_string(const std::string& s);
std::string seq_tag_to_string(SeqTag t);
const std::vector<SeqTag>& all_seq_tags();

Int partition_count(int n);  // cached p(n), 0 for n < 0

// Formula-computed values indexed from 0.
std::vector<Int> sequence(SeqTag tag, int count);

// Nonzero type-indexed terms in the g-expansion of f_d, counted after
// collecting psort fibers.
long long count_nonzero_types(Basis f, Basis g, int d);

struct DivisorCheck {
    Int total;     // must be zero
    Int positive;  // sum of positive summands
    Int negative;  // absolute sum of negative summands
};
DivisorCheck divisor_identity_check(int m);

}  // namespace psym
