#include "psym/involutions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "psym/expansions.hpp"

namespace psym {

namespace {

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

bool same_bar(const Bar& a, const Bar& b) { return a.len == b.len && a.label == b.label; }

// Canonical row index for a bar: after rows that are longer, and after rows of
// equal length with a label <= the bar's (so a bar lands below its identical run).
size_t row_insert_index(const std::vector<Bar>& rows, const Bar& b) {
    size_t i = 0;
    while (i < rows.size() &&
           (rows[i].len > b.len || (rows[i].len == b.len && rows[i].label <= b.label)))
        ++i;
    return i;
}

// Insert `count` copies of `bar` as a contiguous group; keeps an existing mark
// attached to its row and optionally marks the group's top row at `mark_col`.
size_t insert_run(BarTableau& t, const Bar& bar, int count, std::optional<int> mark_col) {
    size_t idx = row_insert_index(t.rows, bar);
    t.rows.insert(t.rows.begin() + idx, static_cast<size_t>(count), bar);
    if (t.mark && t.mark->first >= static_cast<int>(idx)) t.mark->first += count;
    if (mark_col) t.mark = {static_cast<int>(idx), *mark_col};
    return idx;
}

void remove_rows(BarTableau& t, int from, int count) {
    t.rows.erase(t.rows.begin() + from, t.rows.begin() + from + count);
    if (t.mark && t.mark->first >= from + count) t.mark->first -= count;
}

// End of the contiguous run of rows identical to rows[from], starting at `from`.
int run_end(const BarTableau& t, int from) {
    int e = from;
    while (e + 1 < static_cast<int>(t.rows.size()) && same_bar(t.rows[e + 1], t.rows[from])) ++e;
    return e;
}

std::vector<BarTableau>* find_layer(PolyBarTableau& p, int r) {
    for (auto& [idx, tabs] : p.layers)
        if (idx == r) return &tabs;
    return nullptr;
}

std::vector<BarTableau>& ensure_layer(PolyBarTableau& p, int r) {
    for (size_t i = 0; i < p.layers.size(); ++i) {
        if (p.layers[i].first == r) return p.layers[i].second;
        if (p.layers[i].first > r) {
            p.layers.insert(p.layers.begin() + i, {r, {}});
            return p.layers[i].second;
        }
    }
    p.layers.emplace_back(r, std::vector<BarTableau>{});
    return p.layers.back().second;
}

void drop_empty_layers(PolyBarTableau& p) {
    std::erase_if(p.layers, [](const auto& l) { return l.second.empty(); });
}

// ---- stack-or-slash -------------------------------------------------------

// First scanning-order bar B whose successor B' (same layer) satisfies the
// decreasing-parts condition or the (weak/strict) increasing-labels condition.
struct SosInstance {
    int tab;
    int row;         // B = tabs[tab].rows[row]
    bool same_tab;   // B' in the same tableau
};

std::optional<SosInstance> sos_first_instance(const std::vector<BarTableau>& tabs, bool strict) {
    auto fires = [&](const Bar& b, const Bar& bp) {
        if (b.len > bp.len) return true;
        if (b.len != bp.len) return false;
        return strict ? bp.label > b.label : bp.label >= b.label;
    };
    for (size_t t = 0; t < tabs.size(); ++t) {
        const auto& rows = tabs[t].rows;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r + 1 < rows.size()) {
                if (fires(rows[r], rows[r + 1]))
                    return SosInstance{static_cast<int>(t), static_cast<int>(r), true};
            } else if (t + 1 < tabs.size() && !tabs[t + 1].rows.empty()) {
                if (fires(rows[r], tabs[t + 1].rows[0]))
                    return SosInstance{static_cast<int>(t), static_cast<int>(r), false};
            }
        }
    }
    return std::nullopt;
}

// Slash splits a tableau below B; stack concatenates two adjacent tableaux.
std::string sos_apply(std::vector<BarTableau>& tabs, const SosInstance& inst) {
    if (inst.same_tab) {
        BarTableau& t = tabs[inst.tab];
        BarTableau lower;
        lower.rows.assign(t.rows.begin() + inst.row + 1, t.rows.end());
        t.rows.resize(inst.row + 1);
        tabs.insert(tabs.begin() + inst.tab + 1, std::move(lower));
        return "slash";
    }
    BarTableau& t = tabs[inst.tab];
    BarTableau& u = tabs[inst.tab + 1];
    t.rows.insert(t.rows.end(), u.rows.begin(), u.rows.end());
    tabs.erase(tabs.begin() + inst.tab + 1);
    return "stack";
}

// Fixed layer shape: single bars, sizes weakly increasing left to right,
// labels strictly (weak map) or weakly (strict map) decreasing between equal
// sizes. This is exactly the absence of a first instance.
bool layer_is_sos_fixed(const std::vector<BarTableau>& tabs, bool strict) {
    return !sos_first_instance(tabs, strict).has_value();
}

// Rightmost adjacent identical pair among single-bar tableaux.
std::optional<int> rightmost_identical_pair(const std::vector<BarTableau>& tabs) {
    for (int i = static_cast<int>(tabs.size()) - 2; i >= 0; --i)
        if (tabs[i].rows.size() == 1 && tabs[i + 1].rows.size() == 1 &&
            same_bar(tabs[i].rows[0], tabs[i + 1].rows[0]))
            return i;
    return std::nullopt;
}

// Position for a singleton bar in a fixed layer: sizes weakly increase, labels
// weakly decrease between equal sizes, new copies go right of identical bars.
size_t singleton_insert_index(const std::vector<BarTableau>& tabs, const Bar& b) {
    size_t i = 0;
    while (i < tabs.size()) {
        const Bar& cur = tabs[i].rows[0];
        if (cur.len > b.len || (cur.len == b.len && cur.label < b.label)) break;
        ++i;
    }
    return i;
}

BarTableau single_bar(const Bar& b) { return BarTableau{{b}, std::nullopt}; }

// Multiplicity map of a flat tableau's bars.
std::map<Bar, int> bar_counts(const BarTableau& t) {
    std::map<Bar, int> m;
    for (const Bar& b : t.rows) ++m[b];
    return m;
}

BarTableau from_counts(const std::map<Bar, int>& m) {
    std::vector<Bar> bars;
    for (const auto& [b, c] : m)
        for (int i = 0; i < c; ++i) bars.push_back(b);
    return tableau_from_bars(std::move(bars));
}

// ---- individual maps ------------------------------------------------------

ApplyResult apply_sos_map(const TabConfig& x, bool strict) {
    TabConfig y = x;
    if (y.layered.layers.empty()) return {y, "fixed"};
    auto& tabs = y.layered.layers[0].second;
    auto inst = sos_first_instance(tabs, strict);
    if (!inst) return {y, "fixed"};
    std::string rule = sos_apply(tabs, *inst);
    return {y, rule};
}

ApplyResult apply_psi_conv(const TabConfig& x) {
    TabConfig y = x;
    BarTableau& t = y.first;
    BarTableau& u = y.second;
    if (t.rows.empty() && u.rows.empty()) return {y, "fixed"};
    int lt = t.rows.empty() ? 0 : t.rows[0].len;
    int lu = u.rows.empty() ? 0 : u.rows[0].len;
    bool move_down;  // move the top row of t onto u
    if (lt != lu)
        move_down = lt > lu;
    else if (lt == 0)
        move_down = false;
    else
        move_down = t.rows[0].label < u.rows[0].label;
    if (move_down) {
        u.rows.insert(u.rows.begin(), t.rows[0]);
        t.rows.erase(t.rows.begin());
        return {y, "shift-down"};
    }
    t.rows.insert(t.rows.begin(), u.rows[0]);
    u.rows.erase(u.rows.begin());
    return {y, "shift-up"};
}

ApplyResult apply_varphi(const TabConfig& x) {
    if (x.kind == TabConfig::Kind::pair) {
        // insert the marked rectangle into the weak tableau
        TabConfig y;
        y.kind = TabConfig::Kind::layered;
        BarTableau t = x.first;
        const BarTableau& v = x.second;
        size_t idx = insert_run(t, v.rows[0], static_cast<int>(v.rows.size()), v.mark->second);
        (void)idx;
        y.layered.layers = {{1, {std::move(t)}}};
        return {y, "insert"};
    }
    const BarTableau& t = x.layered.layers[0].second[0];
    int rm = t.mark->first;
    int e = run_end(t, rm);
    TabConfig y;
    y.kind = TabConfig::Kind::pair;
    BarTableau v;
    v.rows.assign(e - rm + 1, t.rows[rm]);
    v.mark = {0, t.mark->second};
    BarTableau u = t;
    u.mark.reset();
    remove_rows(u, rm, e - rm + 1);
    y.first = std::move(u);
    y.second = std::move(v);
    return {y, "extract"};
}

ApplyResult apply_rho(const TabConfig& x) {
    TabConfig y = x;
    BarTableau& u = y.first;
    BarTableau& v = y.second;
    Bar b = v.rows.back();
    for (size_t i = 0; i < u.rows.size(); ++i) {
        if (same_bar(u.rows[i], b)) {
            remove_rows(u, static_cast<int>(i), 1);
            v.rows.push_back(b);
            return {y, "absorb"};
        }
    }
    if (v.rows.size() > 1) {
        v.rows.pop_back();
        insert_run(u, b, 1, std::nullopt);
        return {y, "release"};
    }
    return {y, "fixed"};
}

ApplyResult apply_sigma_PH(const TabConfig& x) {
    TabConfig y = x;
    auto& tabs = y.layered.layers[0].second;
    BarTableau& last = tabs.back();
    int rm = last.mark->first;
    int col = last.mark->second;
    bool rectangular = last.is_rectangular();
    if (!(rectangular && rm == 0)) {
        int e = run_end(last, rm);
        BarTableau split;
        split.rows.assign(e - rm + 1, last.rows[rm]);
        split.mark = {0, col};
        last.mark.reset();
        remove_rows(last, rm, e - rm + 1);
        tabs.push_back(std::move(split));
        return {y, "split"};
    }
    if (tabs.size() > 1) {
        BarTableau merged = tabs[tabs.size() - 2];
        insert_run(merged, last.rows[0], static_cast<int>(last.rows.size()), col);
        tabs.pop_back();
        tabs.back() = std::move(merged);
        return {y, "merge"};
    }
    return {y, "fixed"};
}

// Core of the identical-bar extraction move, shared by the square-free and
// single-layer dyadic variants. Acts on a marked sequence of strict tableaux.
std::string sigma_PE_core(std::vector<BarTableau>& tabs) {
    const BarTableau& last = tabs.back();
    Bar bstar = last.rows[last.mark->first];
    auto contains = [&](const BarTableau& t) {
        for (const Bar& b : t.rows)
            if (same_bar(b, bstar)) return true;
        return false;
    };
    for (size_t j = 0; j < tabs.size(); ++j) {
        if (tabs[j].rows.size() > 1 && contains(tabs[j])) {
            BarTableau t = tabs[j];
            int ri = 0;
            while (!same_bar(t.rows[ri], bstar)) ++ri;
            BarTableau split = single_bar(bstar);
            if (t.mark && t.mark->first == ri) {
                split.mark = {0, t.mark->second};
                t.mark.reset();
            }
            remove_rows(t, ri, 1);
            tabs[j] = std::move(t);
            tabs.insert(tabs.begin() + j + 1, std::move(split));
            return "extract";
        }
        if (j > 0 && tabs[j].rows.size() == 1 && same_bar(tabs[j].rows[0], bstar) &&
            !contains(tabs[j - 1])) {
            BarTableau merged = tabs[j - 1];
            std::optional<int> mark_col;
            if (tabs[j].mark) mark_col = tabs[j].mark->second;
            insert_run(merged, bstar, 1, mark_col);
            tabs[j - 1] = std::move(merged);
            tabs.erase(tabs.begin() + j);
            return "merge";
        }
    }
    return "fixed";
}

ApplyResult apply_sigma_PE(const TabConfig& x) {
    TabConfig y = x;
    std::string rule = sigma_PE_core(y.layered.layers[0].second);
    return {y, rule};
}

ApplyResult apply_pair_halve(const TabConfig& x) {
    if (x.kind == TabConfig::Kind::layered) {
        const BarTableau& t = x.layered.layers.empty() ? BarTableau{}
                                                       : x.layered.layers[0].second[0];
        std::map<Bar, int> halves, rest;
        for (const auto& [b, m] : bar_counts(t)) {
            if (m / 2 > 0) halves[b] = m / 2;
            if (m % 2 > 0) rest[b] = 1;
        }
        TabConfig y;
        y.kind = TabConfig::Kind::pair;
        y.first = from_counts(halves);
        y.second = from_counts(rest);
        return {y, "halve"};
    }
    std::map<Bar, int> merged;
    for (const auto& [b, m] : bar_counts(x.first)) merged[b] += 2 * m;
    for (const auto& [b, m] : bar_counts(x.second)) merged[b] += m;
    TabConfig y = TabConfig::single(from_counts(merged));
    return {y, "double"};
}

ApplyResult apply_Fprime(const TabConfig& x) {
    TabConfig y = x;
    BarTableau& u = y.first;
    BarTableau& v = y.second;
    int pair_at = -1;
    for (size_t i = 0; i + 1 < u.rows.size(); ++i)
        if (same_bar(u.rows[i], u.rows[i + 1])) {
            pair_at = static_cast<int>(i);
            break;
        }
    auto pull = [&]() {
        Bar a = v.rows[0];
        v.rows.erase(v.rows.begin());
        insert_run(u, a, 2, std::nullopt);
    };
    if (pair_at < 0) {
        if (v.rows.empty()) return {y, "fixed"};
        pull();
        return {y, "pull"};
    }
    Bar b = u.rows[pair_at];
    bool push = v.rows.empty() || b.len > v.rows[0].len ||
                (b.len == v.rows[0].len && b.label < v.rows[0].label);
    if (push) {
        remove_rows(u, pair_at, 2);
        v.rows.insert(v.rows.begin(), b);
        return {y, "push"};
    }
    pull();
    return {y, "pull"};
}

ApplyResult apply_sigma_layer2_E(const TabConfig& x) {
    TabConfig y = x;
    PolyBarTableau& p = y.layered;
    auto* l1p = find_layer(p, 1);
    std::vector<BarTableau> empty_tabs;
    std::vector<BarTableau>& l1 = l1p ? *l1p : empty_tabs;
    if (auto inst = sos_first_instance(l1, true)) {
        std::string rule = "sos-" + sos_apply(l1, *inst);
        return {y, rule};
    }
    auto* l2p = find_layer(p, 2);
    const BarTableau* t2 = (l2p && !l2p->empty()) ? &(*l2p)[0] : nullptr;

    auto pair_down = [&]() {
        Bar a = (*l2p)[0].rows[0];
        (*l2p)[0].rows.erase((*l2p)[0].rows.begin());
        if ((*l2p)[0].rows.empty()) l2p->clear();
        drop_empty_layers(p);
        auto* l1q = find_layer(p, 1);
        if (!l1q) {
            ensure_layer(p, 1);
            l1q = find_layer(p, 1);
        }
        size_t pos = singleton_insert_index(*l1q, a);
        l1q->insert(l1q->begin() + pos, 2, single_bar(a));
    };

    if (auto i = rightmost_identical_pair(l1)) {
        Bar b = l1[*i].rows[0];
        bool up = !t2 || b.len > t2->rows[0].len ||
                  (b.len == t2->rows[0].len && b.label < t2->rows[0].label);
        if (up) {
            l1.erase(l1.begin() + *i, l1.begin() + *i + 2);
            if (l1.empty()) drop_empty_layers(p);
            ensure_layer(p, 2);
            auto* l2q = find_layer(p, 2);
            if (l2q->empty()) l2q->push_back(BarTableau{});
            (*l2q)[0].rows.insert((*l2q)[0].rows.begin(), b);
            return {y, "pair-up"};
        }
        pair_down();
        return {y, "pair-down"};
    }
    if (t2) {
        pair_down();
        return {y, "pair-down"};
    }
    return {y, "fixed"};
}

ApplyResult apply_sigma_layer2_H(const TabConfig& x) {
    TabConfig y = x;
    PolyBarTableau& p = y.layered;
    auto* l1p = find_layer(p, 1);
    BarTableau t1 = (l1p && !l1p->empty()) ? (*l1p)[0] : BarTableau{};
    std::map<Bar, int> halves, rest;
    for (const auto& [b, m] : bar_counts(t1)) {
        if (m / 2 > 0) halves[b] = m / 2;
        if (m % 2 > 0) rest[b] = 1;
    }
    if (!halves.empty()) {
        BarTableau f = from_counts(halves);
        BarTableau g = from_counts(rest);
        if (g.rows.empty()) {
            if (l1p) l1p->clear();
        } else {
            ensure_layer(p, 1);
            find_layer(p, 1)->assign(1, std::move(g));
        }
        ensure_layer(p, 2);
        auto* l2 = find_layer(p, 2);
        l2->insert(l2->begin(), std::move(f));
        drop_empty_layers(p);
        return {y, "halve"};
    }
    auto* l2p = find_layer(p, 2);
    if (l2p && !l2p->empty()) {
        std::map<Bar, int> merged = bar_counts(t1);
        for (const auto& [b, m] : bar_counts((*l2p)[0])) merged[b] += 2 * m;
        l2p->erase(l2p->begin());
        ensure_layer(p, 1);
        find_layer(p, 1)->assign(1, from_counts(merged));
        drop_empty_layers(p);
        return {y, "double"};
    }
    return {y, "fixed"};
}

bool all_layers_single_distinct(const PolyBarTableau& p) {
    for (const auto& [r, tabs] : p.layers) {
        if ((r & (r - 1)) != 0) return false;
        if (tabs.size() != 1) return false;
        auto counts = bar_counts(tabs[0]);
        for (const auto& [b, m] : counts)
            if (m > 1) return false;
    }
    return true;
}

ApplyResult apply_binary_split(const TabConfig& x) {
    const PolyBarTableau& p = x.layered;
    bool single_layer1 = p.layers.size() == 1 && p.layers[0].first == 1 &&
                         p.layers[0].second.size() == 1;
    if (p.layers.empty()) return {x, "fixed"};
    if (single_layer1) {
        const BarTableau& t = p.layers[0].second[0];
        auto counts = bar_counts(t);
        bool repeated = std::any_of(counts.begin(), counts.end(),
                                    [](const auto& kv) { return kv.second > 1; });
        if (!repeated) return {x, "fixed"};
        TabConfig y;
        std::map<int, std::vector<Bar>> layers;
        for (const auto& [b, m] : counts)
            for (int k = 0; (m >> k) > 0; ++k)
                if ((m >> k) & 1) layers[1 << k].push_back(b);
        for (auto& [r, bars] : layers)
            ensure_layer(y.layered, r).push_back(tableau_from_bars(std::move(bars)));
        return {y, "split"};
    }
    if (!all_layers_single_distinct(p))
        throw std::invalid_argument("configuration outside the binary split domain");
    std::map<Bar, int> merged;
    for (const auto& [r, tabs] : p.layers)
        for (const Bar& b : tabs[0].rows) merged[b] += r;
    TabConfig y = TabConfig::single(from_counts(merged));
    return {y, "merge"};
}

ApplyResult apply_sigma_E_Eplus(const TabConfig& x) {
    TabConfig y = x;
    PolyBarTableau& p = y.layered;
    for (auto& [r, tabs] : p.layers)
        if (auto inst = sos_first_instance(tabs, true)) {
            std::string rule = "sos-" + sos_apply(tabs, *inst);
            return {y, rule};
        }
    if (p.layers.empty()) return {y, "fixed"};
    int h = p.layers.back().first;
    auto& top = p.layers.back().second;
    if (auto i = rightmost_identical_pair(top)) {
        Bar b = top[*i].rows[0];
        top.erase(top.begin() + *i, top.begin() + *i + 2);
        ensure_layer(p, 2 * h).push_back(single_bar(b));
        drop_empty_layers(p);
        return {y, "promote"};
    }
    if (h == 1) return {y, "fixed"};
    Bar b = top.back().rows[0];
    auto* lowp = find_layer(p, h / 2);
    std::vector<BarTableau> empty_tabs;
    auto& low = lowp ? *lowp : empty_tabs;
    auto pr = rightmost_identical_pair(low);
    bool demote = !pr;
    if (pr) {
        Bar u = low[*pr].rows[0];
        demote = b.len > u.len || (b.len == u.len && b.label <= u.label);
    }
    if (demote) {
        top.pop_back();
        auto& lowref = ensure_layer(p, h / 2);
        size_t pos = singleton_insert_index(lowref, b);
        lowref.insert(lowref.begin() + pos, 2, single_bar(b));
        drop_empty_layers(p);
        return {y, "demote"};
    }
    Bar u = low[*pr].rows[0];
    low.erase(low.begin() + *pr, low.begin() + *pr + 2);
    size_t pos = singleton_insert_index(top, u);
    top.insert(top.begin() + pos, single_bar(u));
    drop_empty_layers(p);
    return {y, "promote"};
}

ApplyResult apply_sigma_P_Eplus(const TabConfig& x) {
    TabConfig y = x;
    std::string rule = sigma_PE_core(y.layered.layers[0].second);
    return {y, rule};
}

}  // namespace

std::optional<InvolutionName> involution_from_string(const std::string& s) {
    for (InvolutionName n : all_involutions())
        if (involution_to_string(n) == s) return n;
    return std::nullopt;
}

std::string involution_to_string(InvolutionName n) {
    switch (n) {
        case InvolutionName::weak_sos: return "weak_sos";
        case InvolutionName::strict_sos: return "strict_sos";
        case InvolutionName::psi_conv: return "psi_conv";
        case InvolutionName::varphi_insert: return "varphi_insert";
        case InvolutionName::rho_marked: return "rho_marked";
        case InvolutionName::sigma_PH: return "sigma_PH";
        case InvolutionName::sigma_PE: return "sigma_PE";
        case InvolutionName::pair_halve: return "pair_halve";
        case InvolutionName::Fprime: return "Fprime";
        case InvolutionName::sigma_layer2_E: return "sigma_layer2_E";
        case InvolutionName::sigma_layer2_H: return "sigma_layer2_H";
        case InvolutionName::binary_split: return "binary_split";
        case InvolutionName::sigma_E_Eplus: return "sigma_E_Eplus";
        case InvolutionName::sigma_P_Eplus: return "sigma_P_Eplus";
    }
    return "?";
}

const std::vector<InvolutionName>& all_involutions() {
    static const std::vector<InvolutionName> names = {
        InvolutionName::weak_sos,       InvolutionName::strict_sos,
        InvolutionName::psi_conv,       InvolutionName::varphi_insert,
        InvolutionName::rho_marked,     InvolutionName::sigma_PH,
        InvolutionName::sigma_PE,       InvolutionName::pair_halve,
        InvolutionName::Fprime,         InvolutionName::sigma_layer2_E,
        InvolutionName::sigma_layer2_H, InvolutionName::binary_split,
        InvolutionName::sigma_E_Eplus,  InvolutionName::sigma_P_Eplus,
    };
    return names;
}

std::string TabConfig::to_string() const {
    if (kind == Kind::pair) return "(" + first.to_string() + ", " + second.to_string() + ")";
    return layered.to_string();
}

TabConfig TabConfig::make_pair(BarTableau a, BarTableau b) {
    TabConfig c;
    c.kind = Kind::pair;
    c.first = std::move(a);
    c.second = std::move(b);
    return c;
}

TabConfig TabConfig::single(BarTableau t) {
    TabConfig c;
    if (!t.rows.empty()) c.layered.layers = {{1, {std::move(t)}}};
    return c;
}

TabConfig TabConfig::make_layered(PolyBarTableau t) {
    TabConfig c;
    c.layered = std::move(t);
    return c;
}

ApplyResult apply(InvolutionName name, const TabConfig& x) {
    switch (name) {
        case InvolutionName::weak_sos: return apply_sos_map(x, false);
        case InvolutionName::strict_sos: return apply_sos_map(x, true);
        case InvolutionName::psi_conv: return apply_psi_conv(x);
        case InvolutionName::varphi_insert: return apply_varphi(x);
        case InvolutionName::rho_marked: return apply_rho(x);
        case InvolutionName::sigma_PH: return apply_sigma_PH(x);
        case InvolutionName::sigma_PE: return apply_sigma_PE(x);
        case InvolutionName::pair_halve: return apply_pair_halve(x);
        case InvolutionName::Fprime: return apply_Fprime(x);
        case InvolutionName::sigma_layer2_E: return apply_sigma_layer2_E(x);
        case InvolutionName::sigma_layer2_H: return apply_sigma_layer2_H(x);
        case InvolutionName::binary_split: return apply_binary_split(x);
        case InvolutionName::sigma_E_Eplus: return apply_sigma_E_Eplus(x);
        case InvolutionName::sigma_P_Eplus: return apply_sigma_P_Eplus(x);
    }
    throw std::logic_error("unhandled involution");
}

// ---- domain enumeration ----------------------------------------------------

namespace {

std::vector<BarTableau> tabs_of_size(BarTableauKind kind, int s, int J) {
    return enum_bar_tableaux(kind, s, J);
}

// All sequences of nonempty tableaux whose sizes form the given composition.
void sequences_for(const Composition& alpha, BarTableauKind kind, int J,
                   std::vector<std::vector<BarTableau>>& out) {
    std::vector<std::vector<BarTableau>> choices;
    for (int a : alpha) choices.push_back(tabs_of_size(kind, a, J));
    std::vector<size_t> idx(alpha.size(), 0);
    while (true) {
        std::vector<BarTableau> seq;
        for (size_t i = 0; i < alpha.size(); ++i) seq.push_back(choices[i][idx[i]]);
        out.push_back(std::move(seq));
        size_t k = 0;
        while (k < alpha.size()) {
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (alpha.empty() || k == alpha.size()) break;
    }
}

std::vector<std::vector<BarTableau>> sequences_over(int total, BarTableauKind kind, int J) {
    std::vector<std::vector<BarTableau>> out;
    for (const Composition& alpha : enum_compositions(total)) sequences_for(alpha, kind, J, out);
    return out;
}

// All layered fillings of a polycomposition's shape.
std::vector<PolyBarTableau> fillings(const Polycomposition& delta, BarTableauKind kind, int J) {
    std::vector<PolyBarTableau> acc = {PolyBarTableau{}};
    for (const auto& [r, alpha] : delta.groups) {
        std::vector<std::vector<BarTableau>> seqs;
        sequences_for(alpha, kind, J, seqs);
        std::vector<PolyBarTableau> next;
        for (const PolyBarTableau& base : acc)
            for (const auto& seq : seqs) {
                PolyBarTableau p = base;
                p.layers.emplace_back(r, seq);
                next.push_back(std::move(p));
            }
        acc = std::move(next);
    }
    return acc;
}

// Every way of marking one cell of the last tableau in scanning order.
std::vector<PolyBarTableau> mark_last(const PolyBarTableau& p) {
    std::vector<PolyBarTableau> out;
    if (p.layers.empty()) return out;
    const BarTableau& last = p.layers.back().second.back();
    for (size_t r = 0; r < last.rows.size(); ++r)
        for (int c = 0; c < last.rows[r].len; ++c) {
            PolyBarTableau q = p;
            q.layers.back().second.back().mark = {static_cast<int>(r), c};
            out.push_back(std::move(q));
        }
    return out;
}

std::vector<BarTableau> marked_everywhere(const BarTableau& t) {
    std::vector<BarTableau> out;
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int c = 0; c < t.rows[r].len; ++c) {
            BarTableau q = t;
            q.mark = {static_cast<int>(r), c};
            out.push_back(std::move(q));
        }
    return out;
}

std::vector<TabConfig> domain_over_family(FamilyKind fam, BarTableauKind kind, int d, int J,
                                          bool marked) {
    std::vector<TabConfig> out;
    for (const Polycomposition& delta : enum_pcom_family(fam, d))
        for (const PolyBarTableau& p : fillings(delta, kind, J)) {
            if (marked) {
                for (PolyBarTableau& q : mark_last(p)) out.push_back(TabConfig::make_layered(q));
            } else {
                out.push_back(TabConfig::make_layered(p));
            }
        }
    return out;
}

}  // namespace

std::vector<TabConfig> enum_domain(InvolutionName name, int d, int J) {
    std::vector<TabConfig> out;
    switch (name) {
        case InvolutionName::weak_sos:
            return domain_over_family(FamilyKind::pcom_sqf, BarTableauKind::wbt, d, J, false);
        case InvolutionName::strict_sos:
            return domain_over_family(FamilyKind::pcom_sqf, BarTableauKind::sbt, d, J, false);
        case InvolutionName::sigma_PH:
            return domain_over_family(FamilyKind::pcom_sqf, BarTableauKind::wbt, d, J, true);
        case InvolutionName::sigma_PE:
            return domain_over_family(FamilyKind::pcom_sqf, BarTableauKind::sbt, d, J, true);
        case InvolutionName::psi_conv:
            for (int k = 0; k <= d; ++k)
                for (const BarTableau& t : tabs_of_size(BarTableauKind::wbt, k, J))
                    for (const BarTableau& u : tabs_of_size(BarTableauKind::sbt, d - k, J))
                        out.push_back(TabConfig::make_pair(t, u));
            return out;
        case InvolutionName::rho_marked:
            for (int i = 1; i <= d; ++i)
                for (const BarTableau& u : tabs_of_size(BarTableauKind::sbt, d - i, J))
                    for (const BarTableau& v : tabs_of_size(BarTableauKind::rbt_marked, i, J))
                        out.push_back(TabConfig::make_pair(u, v));
            return out;
        case InvolutionName::varphi_insert:
            for (int i = 1; i <= d; ++i)
                for (const BarTableau& u : tabs_of_size(BarTableauKind::wbt, d - i, J))
                    for (const BarTableau& v : tabs_of_size(BarTableauKind::rbt_marked, i, J))
                        out.push_back(TabConfig::make_pair(u, v));
            for (const BarTableau& t : tabs_of_size(BarTableauKind::wbt, d, J))
                for (const BarTableau& m : marked_everywhere(t))
                    out.push_back(TabConfig::single(m));
            return out;
        case InvolutionName::pair_halve:
            for (const BarTableau& t : tabs_of_size(BarTableauKind::wbt, d, J))
                out.push_back(TabConfig::single(t));
            for (int k = 0; 2 * k <= d; ++k)
                for (const BarTableau& u : tabs_of_size(BarTableauKind::wbt, k, J))
                    for (const BarTableau& v : tabs_of_size(BarTableauKind::sbt, d - 2 * k, J))
                        out.push_back(TabConfig::make_pair(u, v));
            return out;
        case InvolutionName::Fprime:
            for (int k = 0; 2 * k <= d; ++k)
                for (const BarTableau& u : tabs_of_size(BarTableauKind::wbt, d - 2 * k, J))
                    for (const BarTableau& v : tabs_of_size(BarTableauKind::sbt, k, J))
                        out.push_back(TabConfig::make_pair(u, v));
            return out;
        case InvolutionName::sigma_layer2_E:
            return domain_over_family(FamilyKind::pcom_E, BarTableauKind::sbt, d, J, false);
        case InvolutionName::sigma_layer2_H:
            return domain_over_family(FamilyKind::pcom_H, BarTableauKind::wbt, d, J, false);
        case InvolutionName::binary_split:
            for (const BarTableau& t : tabs_of_size(BarTableauKind::wbt, d, J))
                out.push_back(TabConfig::single(t));
            for (const Polycomposition& delta :
                 enum_pcom_family(FamilyKind::pcom_dyad_rows1, d)) {
                // pure layer-1 shapes coincide with the flat side above
                if (delta.groups.empty()) continue;
                if (delta.groups.size() == 1 && delta.groups[0].first == 1) continue;
                for (const PolyBarTableau& p : fillings(delta, BarTableauKind::sbt, J))
                    out.push_back(TabConfig::make_layered(p));
            }
            return out;
        case InvolutionName::sigma_E_Eplus:
            return domain_over_family(FamilyKind::pcom_dyad, BarTableauKind::sbt, d, J, false);
        case InvolutionName::sigma_P_Eplus:
            return domain_over_family(FamilyKind::pcom_dyad_singular, BarTableauKind::sbt, d, J,
                                      true);
    }
    throw std::logic_error("unhandled involution");
}

// ---- weights, monomials, fixed points --------------------------------------

Monomial config_monomial(InvolutionName name, const TabConfig& x) {
    if (x.kind == TabConfig::Kind::pair) {
        Monomial a = tableau_monomial(x.first);
        Monomial b = tableau_monomial(x.second);
        switch (name) {
            case InvolutionName::Fprime: return a.times(b.adams(2));
            case InvolutionName::pair_halve: return a.adams(2).times(b);
            default: return a.times(b);
        }
    }
    return tableau_monomial(x.layered);
}

Rat config_signed_weight(InvolutionName name, const TabConfig& x) {
    switch (name) {
        case InvolutionName::weak_sos:
            return sign_pow(x.layered.tableau_count());
        case InvolutionName::strict_sos:
            return sign_pow(x.layered.tableau_count() + x.layered.bar_count());
        case InvolutionName::psi_conv:
            return sign_pow(static_cast<int>(x.second.rows.size()));
        case InvolutionName::rho_marked:
            return sign_pow(static_cast<int>(x.first.rows.size()) + 1);
        case InvolutionName::sigma_PH:
            return sign_pow(x.layered.tableau_count() + 1);
        case InvolutionName::sigma_PE:
            return sign_pow(x.layered.tableau_count() + x.layered.bar_count());
        case InvolutionName::Fprime:
            return x.kind == TabConfig::Kind::pair
                       ? Rat(sign_pow(static_cast<int>(x.second.rows.size())))
                       : Rat(1);
        case InvolutionName::sigma_layer2_E: {
            int k1 = 0;
            for (const auto& [r, tabs] : x.layered.layers)
                if (r == 1) k1 = static_cast<int>(tabs.size());
            return sign_pow(k1 + x.layered.bar_count());
        }
        case InvolutionName::sigma_layer2_H: {
            int k2 = 0;
            for (const auto& [r, tabs] : x.layered.layers)
                if (r == 2) k2 = static_cast<int>(tabs.size());
            return sign_pow(k2);
        }
        case InvolutionName::sigma_E_Eplus:
            return sign_pow(x.layered.tableau_count());
        case InvolutionName::sigma_P_Eplus: {
            int layer = x.layered.layers.empty() ? 1 : x.layered.layers[0].first;
            return Rat(sign_pow(x.layered.tableau_count() + 1)) * layer;
        }
        case InvolutionName::varphi_insert:
        case InvolutionName::pair_halve:
        case InvolutionName::binary_split:
            return 1;
    }
    throw std::logic_error("unhandled involution");
}

bool is_fixed_characterization(InvolutionName name, const TabConfig& x) {
    auto single_layer1 = [&]() -> const std::vector<BarTableau>* {
        if (x.layered.layers.empty()) return nullptr;
        if (x.layered.layers.size() != 1 || x.layered.layers[0].first != 1) return nullptr;
        return &x.layered.layers[0].second;
    };
    switch (name) {
        case InvolutionName::weak_sos:
        case InvolutionName::strict_sos: {
            if (x.layered.layers.empty()) return true;
            auto* tabs = single_layer1();
            return tabs && layer_is_sos_fixed(*tabs, name == InvolutionName::strict_sos);
        }
        case InvolutionName::psi_conv:
            return x.first.rows.empty() && x.second.rows.empty();
        case InvolutionName::rho_marked: {
            if (x.second.rows.size() != 1) return false;
            for (const Bar& b : x.first.rows)
                if (same_bar(b, x.second.rows[0])) return false;
            return true;
        }
        case InvolutionName::sigma_PH: {
            auto* tabs = single_layer1();
            return tabs && tabs->size() == 1 && (*tabs)[0].is_rectangular() &&
                   (*tabs)[0].mark->first == 0;
        }
        case InvolutionName::sigma_PE: {
            auto* tabs = single_layer1();
            if (!tabs) return false;
            Bar bstar = tabs->back().rows[tabs->back().mark->first];
            for (const BarTableau& t : *tabs)
                if (t.rows.size() != 1 || !same_bar(t.rows[0], bstar)) return false;
            return true;
        }
        case InvolutionName::Fprime: {
            if (!x.second.rows.empty()) return false;
            for (size_t i = 0; i + 1 < x.first.rows.size(); ++i)
                if (same_bar(x.first.rows[i], x.first.rows[i + 1])) return false;
            return true;
        }
        case InvolutionName::sigma_layer2_E: {
            if (x.layered.layers.empty()) return true;
            auto* tabs = single_layer1();
            if (!tabs || !layer_is_sos_fixed(*tabs, true)) return false;
            return !rightmost_identical_pair(*tabs).has_value();
        }
        case InvolutionName::sigma_layer2_H: {
            if (x.layered.layers.empty()) return true;
            auto* tabs = single_layer1();
            if (!tabs || tabs->size() != 1) return false;
            for (const auto& [b, m] : bar_counts((*tabs)[0]))
                if (m > 1) return false;
            return true;
        }
        case InvolutionName::binary_split: {
            if (x.layered.layers.empty()) return true;
            auto* tabs = single_layer1();
            if (!tabs || tabs->size() != 1) return false;
            for (const auto& [b, m] : bar_counts((*tabs)[0]))
                if (m > 1) return false;
            return true;
        }
        case InvolutionName::sigma_E_Eplus: {
            if (x.layered.layers.empty()) return true;
            auto* tabs = single_layer1();
            if (!tabs || !layer_is_sos_fixed(*tabs, true)) return false;
            return !rightmost_identical_pair(*tabs).has_value();
        }
        case InvolutionName::sigma_P_Eplus: {
            if (x.layered.layers.size() != 1) return false;
            const auto& tabs = x.layered.layers[0].second;
            Bar bstar = tabs.back().rows[tabs.back().mark->first];
            for (const BarTableau& t : tabs)
                if (t.rows.size() != 1 || !same_bar(t.rows[0], bstar)) return false;
            return true;
        }
        case InvolutionName::varphi_insert:
        case InvolutionName::pair_halve:
            return false;
    }
    throw std::logic_error("unhandled involution");
}

namespace {

// Flat tableau a fixed point encodes: bars read right to left become rows.
std::optional<BarTableau> fixed_model(InvolutionName name, const TabConfig& x) {
    auto reversed_bars = [&](const std::vector<BarTableau>& tabs,
                             bool carry_mark) -> BarTableau {
        BarTableau t;
        for (auto it = tabs.rbegin(); it != tabs.rend(); ++it) t.rows.push_back(it->rows[0]);
        if (carry_mark && !tabs.empty() && tabs.back().mark) t.mark = {0, tabs.back().mark->second};
        return t;
    };
    switch (name) {
        case InvolutionName::weak_sos:
        case InvolutionName::strict_sos:
        case InvolutionName::sigma_E_Eplus:
        case InvolutionName::sigma_layer2_E:
            if (x.layered.layers.empty()) return BarTableau{};
            return reversed_bars(x.layered.layers[0].second, false);
        case InvolutionName::sigma_PE:
            return reversed_bars(x.layered.layers[0].second, true);
        case InvolutionName::sigma_PH:
            return x.layered.layers[0].second[0];
        case InvolutionName::rho_marked: {
            BarTableau t = x.first;
            insert_run(t, x.second.rows[0], 1, x.second.mark->second);
            return t;
        }
        case InvolutionName::Fprime:
            return x.first;
        case InvolutionName::sigma_layer2_H:
        case InvolutionName::binary_split:
            if (x.layered.layers.empty()) return BarTableau{};
            return x.layered.layers[0].second[0];
        default:
            return std::nullopt;
    }
}

}  // namespace

std::vector<FixedPoint> fixed_points(InvolutionName name, int d, int J) {
    std::vector<FixedPoint> out;
    for (const TabConfig& x : enum_domain(name, d, J)) {
        if (apply(name, x).out == x) out.push_back({x, fixed_model(name, x)});
    }
    return out;
}

namespace {

MonomialSum signed_target(InvolutionName name, int d, int J) {
    switch (name) {
        case InvolutionName::weak_sos:
        case InvolutionName::sigma_E_Eplus:
            return basis_monomials(Basis::E, d, J);
        case InvolutionName::strict_sos:
        case InvolutionName::pair_halve:
        case InvolutionName::binary_split:
            return basis_monomials(Basis::H, d, J);
        case InvolutionName::psi_conv:
            return d == 0 ? MonomialSum::one() : MonomialSum::zero();
        case InvolutionName::rho_marked:
            return basis_monomials(Basis::E, d, J).scaled(d);
        case InvolutionName::varphi_insert:
            return basis_monomials(Basis::H, d, J).scaled(d);
        case InvolutionName::sigma_PH:
        case InvolutionName::sigma_PE:
        case InvolutionName::sigma_P_Eplus:
            // the marked models only exist for d >= 1
            return d == 0 ? MonomialSum::zero() : basis_monomials(Basis::P, d, J);
        case InvolutionName::Fprime:
        case InvolutionName::sigma_layer2_E:
        case InvolutionName::sigma_layer2_H:
            return basis_monomials(Basis::Eplus, d, J);
    }
    throw std::logic_error("unhandled involution");
}

// For the union-folded bijections the signed sum runs over one side only.
bool counts_toward_target(InvolutionName name, const TabConfig& x) {
    switch (name) {
        case InvolutionName::varphi_insert:
        case InvolutionName::pair_halve:
            return x.kind == TabConfig::Kind::pair;
        case InvolutionName::binary_split:
            // the split side: single layer-1 weak tableau (fixed points included)
            return x.layered.layers.empty() ||
                   (x.layered.layers.size() == 1 && x.layered.layers[0].first == 1);
        default:
            return true;
    }
}

bool has_sign_reversal(InvolutionName name) {
    switch (name) {
        case InvolutionName::varphi_insert:
        case InvolutionName::pair_halve:
        case InvolutionName::binary_split:
            return false;
        default:
            return true;
    }
}

}  // namespace

InvolutionReport check_involution(InvolutionName name, int d, int J) {
    InvolutionReport rep;
    rep.name = involution_to_string(name);
    rep.d = d;
    rep.max_label = J;
    std::vector<TabConfig> domain = enum_domain(name, d, J);
    rep.domain_size = domain.size();
    MonomialSum total;
    std::vector<const TabConfig*> fixed;
    for (const TabConfig& x : domain) {
        ApplyResult r1 = apply(name, x);
        bool fixed_here = r1.out == x;
        if (fixed_here != is_fixed_characterization(name, x))
            rep.fail("fixed-point characterization mismatch at " + x.to_string());
        if (fixed_here) {
            fixed.push_back(&x);
        } else {
            ApplyResult r2 = apply(name, r1.out);
            if (!(r2.out == x))
                rep.fail("not an involution at " + x.to_string() + " -> " + r1.out.to_string());
            if (!(config_monomial(name, r1.out) == config_monomial(name, x)))
                rep.fail("monomial not preserved at " + x.to_string());
            if (has_sign_reversal(name)) {
                if (config_signed_weight(name, r1.out) != -config_signed_weight(name, x))
                    rep.fail("signed weight not negated at " + x.to_string());
            }
        }
        if (counts_toward_target(name, x))
            total.add_term(config_monomial(name, x), config_signed_weight(name, x));
    }
    rep.fixed_count = fixed.size();
    if (!(total == signed_target(name, d, J))) rep.fail("signed total differs from target");

    // fixed points must realize the expected flat model exactly once each
    auto expect_models = [&](std::vector<BarTableau> expected) {
        std::multiset<BarTableau> want(expected.begin(), expected.end());
        std::multiset<BarTableau> got;
        for (const TabConfig* x : fixed) {
            auto m = fixed_model(name, *x);
            if (m) got.insert(*m);
        }
        if (want != got) rep.fail("fixed points do not match their model set");
    };
    switch (name) {
        case InvolutionName::weak_sos:
        case InvolutionName::Fprime:
        case InvolutionName::sigma_layer2_E:
        case InvolutionName::sigma_layer2_H:
        case InvolutionName::binary_split:
        case InvolutionName::sigma_E_Eplus:
            expect_models(enum_bar_tableaux(BarTableauKind::sbt, d, J));
            break;
        case InvolutionName::strict_sos:
            expect_models(enum_bar_tableaux(BarTableauKind::wbt, d, J));
            break;
        case InvolutionName::sigma_PH:
        case InvolutionName::sigma_PE:
            expect_models(enum_bar_tableaux(BarTableauKind::rbt_marked, d, J));
            break;
        case InvolutionName::rho_marked: {
            std::vector<BarTableau> want;
            for (const BarTableau& t : enum_bar_tableaux(BarTableauKind::sbt, d, J))
                for (const BarTableau& m : marked_everywhere(t)) want.push_back(m);
            expect_models(std::move(want));
            break;
        }
        case InvolutionName::psi_conv:
            if (d > 0 && !fixed.empty()) rep.fail("unexpected fixed points");
            break;
        case InvolutionName::varphi_insert:
        case InvolutionName::pair_halve:
            if (!fixed.empty()) rep.fail("bijection must have no fixed points");
            break;
        case InvolutionName::sigma_P_Eplus: {
            // per (bar, mark column): the signed layer weights telescope to 1
            std::map<std::tuple<int, int, int>, Rat> groups;  // (len, label, col)
            for (const TabConfig* x : fixed) {
                const auto& tabs = x->layered.layers[0].second;
                const Bar& b = tabs[0].rows[0];
                groups[{b.len, b.label, tabs.back().mark->second}] +=
                    config_signed_weight(name, *x);
            }
            for (const auto& [key, sum] : groups)
                if (sum != 1) rep.fail("layer family does not telescope to 1");
            break;
        }
    }
    return rep;
}

// ---- permutations and the choice-sequence bijection -------------------------

void Permutation::canonicalize() {
    for (auto& c : cycles) {
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a[0] > b[0]; });
}

Composition Permutation::cycle_composition() const {
    Composition out;
    for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
    return out;
}

Partition Permutation::cycle_partition() const { return sort_composition(cycle_composition()); }

int Permutation::ground_size() const {
    int n = 0;
    for (const auto& c : cycles)
        for (int v : c) n = std::max(n, v);
    return n;
}

std::string Permutation::to_string() const {
    std::string s;
    for (const auto& c : cycles) {
        s += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

namespace {

// reading-order position (1-based) of cell (row, col)
int reading_position(const std::vector<Bar>& rows, int row, int col) {
    int p = 0;
    for (int r = 0; r < row; ++r) p += rows[r].len;
    return p + col + 1;
}

std::pair<int, int> cell_at_position(const std::vector<Bar>& rows, int pos) {
    int r = 0;
    while (pos > rows[r].len) {
        pos -= rows[r].len;
        ++r;
    }
    return {r, pos - 1};
}

}  // namespace

std::pair<Permutation, std::vector<BarTableau>> phi_forward(const ChoiceSequence& c,
                                                            const BarTableau& t) {
    int d = t.cells();
    if (static_cast<int>(c.size()) != d)
        throw std::invalid_argument("choice sequence length must equal the cell count");
    for (int i = 0; i < d; ++i)
        if (c[i] < 1 || c[i] > d - i)
            throw std::invalid_argument("choice entry out of range");

    std::vector<int> avail(d);
    for (int i = 0; i < d; ++i) avail[i] = i + 1;
    BarTableau work = t;
    work.mark.reset();
    size_t cpos = 0;
    std::vector<std::vector<int>> cycles;
    std::vector<BarTableau> tabs;

    while (!work.rows.empty()) {
        auto [row, col] = cell_at_position(work.rows, c[cpos++]);
        int e = run_end(work, row);
        int nbars = e - row + 1;
        BarTableau rect;
        rect.rows.assign(nbars, work.rows[row]);
        rect.mark = {0, col};
        int cells = nbars * work.rows[row].len;
        remove_rows(work, row, nbars);

        std::vector<int> cycle;
        cycle.push_back(avail.front());
        avail.erase(avail.begin());
        for (int q = 1; q < cells; ++q) {
            int sel = c[cpos++];
            cycle.push_back(avail[sel - 1]);
            avail.erase(avail.begin() + sel - 1);
        }
        cycles.push_back(std::move(cycle));
        tabs.push_back(std::move(rect));
    }

    Permutation pi;
    pi.cycles.assign(cycles.rbegin(), cycles.rend());
    std::vector<BarTableau> out_tabs(tabs.rbegin(), tabs.rend());
    return {pi, std::move(out_tabs)};
}

std::pair<ChoiceSequence, BarTableau> phi_inverse(const Permutation& pi,
                                                  const std::vector<BarTableau>& tabs) {
    if (pi.cycles.size() != tabs.size())
        throw std::invalid_argument("cycle count must match tableau count");
    int d = 0;
    for (size_t i = 0; i < tabs.size(); ++i) {
        if (static_cast<int>(pi.cycles[i].size()) != tabs[i].cells())
            throw std::invalid_argument("cycle length must match tableau size");
        d += tabs[i].cells();
    }

    std::vector<int> a;  // cycles left to right, entries right to left
    std::map<int, size_t> cycle_of_min;
    for (size_t i = 0; i < pi.cycles.size(); ++i) {
        const auto& cyc = pi.cycles[i];
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) a.push_back(*it);
        cycle_of_min[cyc[0]] = i;
    }

    std::vector<int> inserted;  // sorted
    BarTableau work;
    std::vector<int> cvals(d);  // cvals[j-1] = c_j
    for (int j = 1; j <= d; ++j) {
        int v = a[j - 1];
        auto pos = std::lower_bound(inserted.begin(), inserted.end(), v);
        inserted.insert(pos, v);
        auto it = cycle_of_min.find(v);
        if (it != cycle_of_min.end()) {
            const BarTableau& rect = tabs[it->second];
            size_t idx =
                insert_run(work, rect.rows[0], static_cast<int>(rect.rows.size()),
                           rect.mark->second);
            cvals[j - 1] = reading_position(work.rows, static_cast<int>(idx) + rect.mark->first,
                                            rect.mark->second);
            work.mark.reset();
        } else {
            int rank = static_cast<int>(std::lower_bound(inserted.begin(), inserted.end(), v) -
                                        inserted.begin()) +
                       1;
            cvals[j - 1] = rank;
        }
    }
    ChoiceSequence c(cvals.rbegin(), cvals.rend());
    return {c, work};
}

}  // namespace psym
