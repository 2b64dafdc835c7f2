#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psym/combinat.hpp"
#include "psym/monomials.hpp"
#include "psym/rational.hpp"

namespace psym {

enum class InvolutionName {
    weak_sos,        // stack-or-slash on single-layer weak tableaux
    strict_sos,      // stack-or-slash on single-layer strict tableaux
    psi_conv,        // top-row shuttle on (weak, strict) pairs
    varphi_insert,   // (weak, marked rectangular) <-> marked weak tableau
    rho_marked,      // bottom-bar shuttle on (strict, marked rectangular) pairs
    sigma_PH,        // marked-run split/merge on marked weak sequences
    sigma_PE,        // identical-bar extraction on marked strict sequences
    pair_halve,      // weak tableau <-> (halved pairs, leftover strict)
    Fprime,          // doubled top-row shuttle on (weak, strict) pairs
    sigma_layer2_E,  // two-layer strict sequences, layer-2 single tableau
    sigma_layer2_H,  // two-layer weak sequences, layer-1 single tableau
    binary_split,    // weak tableau <-> per-bit layers of distinct bars
    sigma_E_Eplus,   // power-of-two layers of strict sequences
    sigma_P_Eplus,   // marked strict sequence in a single power-of-two layer
};

std::optional<InvolutionName> involution_from_string(const std::string& s);
std::string involution_to_string(InvolutionName n);
const std::vector<InvolutionName>& all_involutions();

// One tableau configuration: either a layered family or an ordered pair of
// flat tableaux. Bijective maps are folded into the same entry point by
// letting apply() act on the union of their two sides.
struct TabConfig {
    enum class Kind { layered, pair };
    Kind kind = Kind::layered;
    PolyBarTableau layered;
    BarTableau first, second;

    std::string to_string() const;
    auto operator<=>(const TabConfig&) const = default;

    static TabConfig make_pair(BarTableau a, BarTableau b);
    static TabConfig single(BarTableau t);  // layer 1, one tableau
    static TabConfig make_layered(PolyBarTableau t);
};

struct ApplyResult {
    TabConfig out;
    std::string rule;  // which case fired ("slash", "stack", "fixed", ...)
};

ApplyResult apply(InvolutionName name, const TabConfig& x);

// Full enumeration of the map's domain (both sides, for the bijections).
std::vector<TabConfig> enum_domain(InvolutionName name, int d, int max_label);

// Monomial and signed weight of a configuration under the given map.
Monomial config_monomial(InvolutionName name, const TabConfig& x);
Rat config_signed_weight(InvolutionName name, const TabConfig& x);

bool is_fixed_characterization(InvolutionName name, const TabConfig& x);

struct FixedPoint {
    TabConfig config;
    std::optional<BarTableau> model;  // the flat tableau it encodes, when one exists
};
std::vector<FixedPoint> fixed_points(InvolutionName name, int d, int max_label);

struct InvolutionReport {
    bool ok = true;
    std::string name;
    int d = 0;
    int max_label = 0;
    size_t domain_size = 0;
    size_t fixed_count = 0;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        if (failures.size() < 20) failures.push_back(std::move(msg));
    }
};

// Exhaustively checks: apply is an involution, non-fixed points keep their
// monomial and flip their signed weight, fixed points match the
// characterization, and the signed total equals the identity's closed form.
InvolutionReport check_involution(InvolutionName name, int d, int max_label);

// Cycle decomposition in canonical form: every cycle starts at its minimum,
// cycles ordered left to right by decreasing minimum.
struct Permutation {
    std::vector<std::vector<int>> cycles;

    void canonicalize();
    Composition cycle_composition() const;  // lengths, left to right
    Partition cycle_partition() const;
    int ground_size() const;
    std::string to_string() const;
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// entries (c_d, ..., c_1) with 1 <= c_i <= i
using ChoiceSequence = std::vector<int>;

// Bijection between (choice sequence, weak tableau) and (permutation,
// sequence of marked rectangular tableaux); sizes of the tableaux match the
// cycle lengths left to right.
std::pair<Permutation, std::vector<BarTableau>> phi_forward(const ChoiceSequence& c,
                                                            const BarTableau& t);
std::pair<ChoiceSequence, BarTableau> phi_inverse(const Permutation& pi,
                                                  const std::vector<BarTableau>& tabs);

}  // namespace psym
