#include "psym/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace psym {

long long Monomial::degree() const {
    long long d = 0;
    for (const auto& [i, j, e] : vars) d += static_cast<long long>(i) * e;
    return d;
}

int Monomial::total_exponent() const {
    int t = 0;
    for (const auto& [i, j, e] : vars) t += e;
    return t;
}

bool Monomial::square_free() const {
    for (const auto& [i, j, e] : vars)
        if (e > 1) return false;
    return true;
}

int Monomial::max_label() const {
    int m = 0;
    for (const auto& [i, j, e] : vars) m = std::max(m, j);
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    std::map<std::pair<int, int>, int> exp;
    for (const auto& [i, j, e] : vars) exp[{i, j}] += e;
    for (const auto& [i, j, e] : o.vars) exp[{i, j}] += e;
    Monomial out;
    for (const auto& [ij, e] : exp) out.vars.push_back({ij.first, ij.second, e});
    return out;
}

Monomial Monomial::adams(int r) const {
    Monomial out = *this;
    for (auto& v : out.vars) v[2] *= r;
    return out;
}

std::string Monomial::to_string() const {
    if (vars.empty()) return "1";
    std::string s;
    for (const auto& [i, j, e] : vars) {
        if (!s.empty()) s += '.';
        s += "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

void MonomialSum::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

MonomialSum MonomialSum::plus(const MonomialSum& o) const {
    MonomialSum out = *this;
    for (const auto& [m, c] : o.terms) out.add_term(m, c);
    return out;
}

MonomialSum MonomialSum::times(const MonomialSum& o) const {
    MonomialSum out;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) out.add_term(m1.times(m2), c1 * c2);
    return out;
}

MonomialSum MonomialSum::scaled(const Rat& c) const {
    MonomialSum out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms) out.terms.emplace(m, v * c);
    return out;
}

MonomialSum MonomialSum::adams(int r) const {
    MonomialSum out;
    for (const auto& [m, c] : terms) out.add_term(m.adams(r), c);
    return out;
}

MonomialSum MonomialSum::restrict_labels(int max_label) const {
    MonomialSum out;
    for (const auto& [m, c] : terms)
        if (m.max_label() <= max_label) out.add_term(m, c);
    return out;
}

MonomialSum MonomialSum::one() {
    MonomialSum s;
    s.terms.emplace(Monomial{}, Rat(1));
    return s;
}

int BarTableau::cells() const {
    int c = 0;
    for (const Bar& b : rows) c += b.len;
    return c;
}

bool BarTableau::is_weak() const {
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].len > rows[i - 1].len) return false;
        if (rows[i].len == rows[i - 1].len && rows[i].label < rows[i - 1].label) return false;
    }
    return true;
}

bool BarTableau::is_strict() const {
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].len > rows[i - 1].len) return false;
        if (rows[i].len == rows[i - 1].len && rows[i].label <= rows[i - 1].label) return false;
    }
    return true;
}

bool BarTableau::is_rectangular() const {
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i] != rows[0]) return false;
    return true;
}

std::string BarTableau::to_string() const {
    if (rows.empty()) return "[]";
    std::string s = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += '|';
        for (int c = 0; c < rows[i].len; ++c) {
            if (c) s += ' ';
            s += std::to_string(rows[i].label);
            if (mark && mark->first == static_cast<int>(i) && mark->second == c) s += '*';
        }
    }
    return s + "]";
}

int PolyBarTableau::tableau_count() const {
    int n = 0;
    for (const auto& [r, ts] : layers) n += static_cast<int>(ts.size());
    return n;
}

int PolyBarTableau::bar_count() const {
    int n = 0;
    for (const auto& [r, ts] : layers)
        for (const BarTableau& t : ts) n += static_cast<int>(t.rows.size());
    return n;
}

Polycomposition PolyBarTableau::shape() const {
    Polycomposition delta;
    for (const auto& [r, ts] : layers) {
        Composition alpha;
        for (const BarTableau& t : ts) alpha.push_back(t.cells());
        if (!alpha.empty()) delta.groups.emplace_back(r, std::move(alpha));
    }
    return delta;
}

std::string PolyBarTableau::to_string() const {
    std::string s;
    for (const auto& [r, ts] : layers) {
        s += std::to_string(r) + ": ";
        for (const BarTableau& t : ts) s += t.to_string() + " ";
        s += "; ";
    }
    return s.empty() ? "(empty)" : s;
}

Monomial tableau_monomial(const BarTableau& t) {
    std::map<std::pair<int, int>, int> count;
    for (const Bar& b : t.rows) ++count[{b.len, b.label}];
    Monomial m;
    for (const auto& [ij, e] : count) m.vars.push_back({ij.first, ij.second, e});
    return m;
}

Monomial tableau_monomial(const PolyBarTableau& t) {
    Monomial out;
    for (const auto& [r, ts] : t.layers)
        for (const BarTableau& tab : ts) out = out.times(tableau_monomial(tab).adams(r));
    return out;
}

BarTableau tableau_from_bars(std::vector<Bar> bars) {
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.len != b.len) return a.len > b.len;
        return a.label < b.label;
    });
    return BarTableau{std::move(bars), std::nullopt};
}

namespace {

// All multisets of `count` labels drawn from 1..max_label, weakly increasing.
void label_multisets(int count, int max_label, int lo, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = lo; j <= max_label; ++j) {
        cur.push_back(j);
        label_multisets(count - 1, max_label, j, cur, out);
        cur.pop_back();
    }
}

void label_sets(int count, int max_label, int lo, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = lo; j <= max_label; ++j) {
        cur.push_back(j);
        label_sets(count - 1, max_label, j + 1, cur, out);
        cur.pop_back();
    }
}

// Tableaux of shape lambda with per-size label choices (weak or strict).
void tableaux_for_shape(const Partition& lambda, int max_label, bool strict,
                        std::vector<BarTableau>& out) {
    // group equal part sizes
    std::vector<std::pair<int, int>> runs;  // (size, multiplicity)
    for (int p : lambda) {
        if (!runs.empty() && runs.back().first == p)
            ++runs.back().second;
        else
            runs.emplace_back(p, 1);
    }
    std::vector<std::vector<std::vector<int>>> choices(runs.size());
    for (size_t i = 0; i < runs.size(); ++i) {
        std::vector<int> cur;
        if (strict)
            label_sets(runs[i].second, max_label, 1, cur, choices[i]);
        else
            label_multisets(runs[i].second, max_label, 1, cur, choices[i]);
        if (choices[i].empty()) return;  // not enough labels for a strict run
    }
    std::vector<size_t> idx(runs.size(), 0);
    while (true) {
        BarTableau t;
        for (size_t i = 0; i < runs.size(); ++i)
            for (int lab : choices[i][idx[i]]) t.rows.push_back({runs[i].first, lab});
        out.push_back(std::move(t));
        size_t k = 0;
        while (k < runs.size()) {
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == runs.size()) break;
    }
}

}  // namespace

std::vector<BarTableau> enum_bar_tableaux(BarTableauKind kind, int d, int max_label) {
    std::vector<BarTableau> out;
    if (d == 0) {
        if (kind != BarTableauKind::rbt_marked) out.push_back(BarTableau{});
        return out;
    }
    switch (kind) {
        case BarTableauKind::wbt:
        case BarTableauKind::sbt:
            for (const Partition& lam : enum_partitions(d))
                tableaux_for_shape(lam, max_label, kind == BarTableauKind::sbt, out);
            break;
        case BarTableauKind::rbt_marked:
            for (int k = 1; k <= d; ++k) {
                if (d % k != 0) continue;
                int nbars = d / k;
                for (int j = 1; j <= max_label; ++j)
                    for (int col = 0; col < k; ++col) {
                        BarTableau t;
                        t.rows.assign(nbars, Bar{k, j});
                        t.mark = {0, col};
                        out.push_back(std::move(t));
                    }
            }
            break;
    }
    return out;
}

std::optional<Basis> basis_from_string(const std::string& s) {
    if (s == "H" || s == "h") return Basis::H;
    if (s == "E" || s == "e") return Basis::E;
    if (s == "Eplus" || s == "E+" || s == "eplus" || s == "U") return Basis::Eplus;
    if (s == "P" || s == "p") return Basis::P;
    return std::nullopt;
}

std::string basis_to_string(Basis b) {
    switch (b) {
        case Basis::H: return "H";
        case Basis::E: return "E";
        case Basis::Eplus: return "E+";
        case Basis::P: return "P";
    }
    return "?";
}

MonomialSum basis_monomials(Basis f, int d, int max_label) {
    if (d < 0) return MonomialSum::zero();
    if (d == 0) return MonomialSum::one();
    MonomialSum out;
    switch (f) {
        case Basis::H:
            for (const BarTableau& t : enum_bar_tableaux(BarTableauKind::wbt, d, max_label))
                out.add_term(tableau_monomial(t), 1);
            break;
        case Basis::Eplus:
            for (const BarTableau& t : enum_bar_tableaux(BarTableauKind::sbt, d, max_label))
                out.add_term(tableau_monomial(t), 1);
            break;
        case Basis::E:
            for (const BarTableau& t : enum_bar_tableaux(BarTableauKind::sbt, d, max_label))
                out.add_term(tableau_monomial(t), t.rows.size() % 2 == 0 ? 1 : -1);
            break;
        case Basis::P:
            for (int k = 1; k <= d; ++k) {
                if (d % k != 0) continue;
                for (int j = 1; j <= max_label; ++j) {
                    Monomial m;
                    m.vars.push_back({k, j, d / k});
                    out.add_term(m, k);
                }
            }
            break;
    }
    return out;
}

MonomialSum adams_pow(const MonomialSum& s, int r) {
    if (r < 1) throw std::invalid_argument("adams power must be >= 1");
    return s.adams(r);
}

MonomialSum expand_over_pcom(Basis f, const Polycomposition& delta, int max_label) {
    MonomialSum out = MonomialSum::one();
    for (const Block& b : delta.blocks())
        out = out.times(adams_pow(basis_monomials(f, b.degree, max_label), b.mult));
    return out;
}

}  // namespace psym
