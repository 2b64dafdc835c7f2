#include "psym/expansions.hpp"

#include <algorithm>
#include <stdexcept>

namespace psym {

namespace {

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

Rat pcom_Z(const Polycomposition& delta) {
    Rat z = 1;
    for (const auto& [r, alpha] : delta.groups) z *= Rat(Z_composition(alpha));
    return z;
}

}  // namespace

PcomExpansion expand_elementary(Basis f, Basis g, int d) {
    if (f == g) throw std::invalid_argument("expansion requires distinct bases");
    PcomExpansion e{f, g, d, {}};
    if (d == 0) {
        e.terms.emplace_back(Polycomposition{}, Rat(1));
        return e;
    }
    auto over = [&](FamilyKind kind, auto coeff) {
        for (const Polycomposition& delta : enum_pcom_family(kind, d)) {
            Rat c = coeff(delta);
            if (c != 0) e.terms.emplace_back(delta, c);
        }
    };
    if ((f == Basis::H && g == Basis::E) || (f == Basis::E && g == Basis::H)) {
        over(FamilyKind::pcom_sqf,
             [](const Polycomposition& d_) { return Rat(sign_pow(d_.length())); });
    } else if (f == Basis::P && (g == Basis::H || g == Basis::E)) {
        int off = g == Basis::H ? 1 : 0;
        over(FamilyKind::pcom_sqf, [&](const Polycomposition& d_) {
            long long L = *block_stats(d_).last_block_size;
            return Rat(sign_pow(d_.length() + off)) * L;
        });
    } else if ((f == Basis::H || f == Basis::E) && g == Basis::P) {
        int off = f == Basis::H ? 0 : 1;
        over(FamilyKind::pcom_sqf, [&](const Polycomposition& d_) {
            return Rat(sign_pow(d_.length() * off)) / pcom_Z(d_);
        });
    } else if (f == Basis::Eplus && g == Basis::E) {
        over(FamilyKind::pcom_E, [](const Polycomposition& d_) {
            const Composition* alpha = d_.group_at(1);
            return Rat(sign_pow(alpha ? static_cast<int>(alpha->size()) : 0));
        });
    } else if (f == Basis::Eplus && g == Basis::H) {
        over(FamilyKind::pcom_H, [](const Polycomposition& d_) {
            const Composition* beta = d_.group_at(2);
            return Rat(sign_pow(beta ? static_cast<int>(beta->size()) : 0));
        });
    } else if (f == Basis::Eplus && g == Basis::P) {
        over(FamilyKind::pcom_P, [](const Polycomposition& d_) {
            const Composition* beta = d_.group_at(2);
            int lb = beta ? static_cast<int>(beta->size()) : 0;
            return Rat(sign_pow(lb)) / pcom_Z(d_);
        });
    } else if (f == Basis::H && g == Basis::Eplus) {
        over(FamilyKind::pcom_dyad_rows1, [](const Polycomposition&) { return Rat(1); });
    } else if (f == Basis::E && g == Basis::Eplus) {
        over(FamilyKind::pcom_dyad,
             [](const Polycomposition& d_) { return Rat(sign_pow(d_.length())); });
    } else if (f == Basis::P && g == Basis::Eplus) {
        over(FamilyKind::pcom_dyad_singular, [](const Polycomposition& d_) {
            long long L = *block_stats(d_).last_block_size;
            return Rat(sign_pow(d_.length() + 1)) * L;
        });
    } else {
        throw std::invalid_argument("unsupported basis pair");
    }
    return e;
}

TypeExpansion collect_types(const PcomExpansion& e) {
    TypeExpansion out{e.from, e.to, TypeIndex{}, {}};
    for (const auto& [delta, c] : e.terms) {
        TypeIndex tau = psort(delta);
        auto it = out.terms.find(tau);
        if (it == out.terms.end())
            out.terms.emplace(std::move(tau), c);
        else {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

TypeExpansion expand_type_element(Basis f, Basis g, const TypeIndex& sigma) {
    TypeExpansion out{f, g, sigma, {}};
    out.terms.emplace(TypeIndex{}, Rat(1));
    for (const Block& blk : sigma.blocks()) {
        TypeExpansion elem = collect_types(expand_elementary(f, g, blk.degree));
        std::map<TypeIndex, Rat> next;
        for (const auto& [acc_tau, acc_c] : out.terms) {
            for (const auto& [tau, c] : elem.terms) {
                TypeIndex combined = type_union(acc_tau, type_power(tau, blk.mult));
                Rat& slot = next[combined];
                slot += acc_c * c;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        out.terms = std::move(next);
    }
    return out;
}

const Rat& TransitionMatrix::at(const TypeIndex& row, const TypeIndex& col) const {
    auto find = [&](const TypeIndex& t) {
        auto it = std::find(types.begin(), types.end(), t);
        if (it == types.end()) throw std::invalid_argument("type not in matrix index");
        return static_cast<size_t>(it - types.begin());
    };
    return entries[find(row)][find(col)];
}

TransitionMatrix transition_matrix(Basis f, Basis g, int n) {
    TransitionMatrix m;
    m.from = f;
    m.to = g;
    m.n = n;
    m.types = enum_types(n);
    size_t k = m.types.size();
    m.entries.assign(k, std::vector<Rat>(k, Rat(0)));
    std::map<TypeIndex, size_t> index;
    for (size_t i = 0; i < k; ++i) index[m.types[i]] = i;
    for (size_t col = 0; col < k; ++col) {
        TypeExpansion e = expand_type_element(f, g, m.types[col]);
        for (const auto& [tau, c] : e.terms) m.entries[index.at(tau)][col] = c;
    }
    return m;
}

TransitionMatrix matrix_product(const TransitionMatrix& a, const TransitionMatrix& b) {
    if (a.n != b.n || a.types != b.types)
        throw std::invalid_argument("matrix dimensions do not match");
    TransitionMatrix m;
    m.from = b.from;
    m.to = a.to;
    m.n = a.n;
    m.types = a.types;
    size_t k = a.types.size();
    m.entries.assign(k, std::vector<Rat>(k, Rat(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a.entries[i][l] == 0) continue;
            for (size_t j = 0; j < k; ++j) {
                if (b.entries[l][j] == 0) continue;
                m.entries[i][j] += a.entries[i][l] * b.entries[l][j];
            }
        }
    return m;
}

bool is_identity(const TransitionMatrix& m) {
    for (size_t i = 0; i < m.types.size(); ++i)
        for (size_t j = 0; j < m.types.size(); ++j)
            if (m.entries[i][j] != (i == j ? Rat(1) : Rat(0))) return false;
    return true;
}

CheckReport matrix_checks(int n) {
    CheckReport rep;
    const Basis bases[] = {Basis::H, Basis::E, Basis::Eplus, Basis::P};
    std::map<std::pair<Basis, Basis>, TransitionMatrix> mats;
    for (Basis f : bases)
        for (Basis g : bases)
            if (f != g) mats[{f, g}] = transition_matrix(f, g, n);

    for (Basis f : bases)
        for (Basis g : bases) {
            if (f == g) continue;
            TransitionMatrix prod = matrix_product(mats[{f, g}], mats[{g, f}]);
            for (size_t i = 0; i < prod.types.size() && rep.ok; ++i)
                for (size_t j = 0; j < prod.types.size(); ++j) {
                    Rat want = i == j ? 1 : 0;
                    if (prod.entries[i][j] != want) {
                        rep.fail("M(" + basis_to_string(f) + "," + basis_to_string(g) + ")*M(" +
                                 basis_to_string(g) + "," + basis_to_string(f) + ") entry [" +
                                 std::to_string(i) + "," + std::to_string(j) + "] = " +
                                 rat_to_string(prod.entries[i][j]) + ", expected " +
                                 rat_to_string(want));
                        break;
                    }
                }
        }

    // expand P into H, swap H_tau -> E_tau, expand back into P
    {
        TransitionMatrix conj = matrix_product(mats[{Basis::E, Basis::P}], mats[{Basis::P, Basis::H}]);
        for (size_t i = 0; i < conj.types.size(); ++i)
            for (size_t j = 0; j < conj.types.size(); ++j) {
                Rat want = i == j ? Rat(sign_pow(conj.types[i].length())) : Rat(0);
                if (conj.entries[i][j] != want) {
                    rep.fail("P-basis conjugation entry [" + std::to_string(i) + "," +
                             std::to_string(j) + "] = " + rat_to_string(conj.entries[i][j]) +
                             ", expected " + rat_to_string(want));
                }
            }
    }

    {
        const TransitionMatrix& he = mats[{Basis::H, Basis::E}];
        const TransitionMatrix& eh = mats[{Basis::E, Basis::H}];
        if (he.entries != eh.entries) rep.fail("M(H,E) != M(E,H)");
    }
    return rep;
}

namespace {

struct ExpansionTag {
    Basis from, to;
};

std::optional<ExpansionTag> parse_expansion_tag(std::string tag) {
    std::replace(tag.begin(), tag.end(), '-', '_');
    size_t sep = tag.find("_in_");
    if (sep == std::string::npos) return std::nullopt;
    auto f = basis_from_string(tag.substr(0, sep));
    auto g = basis_from_string(tag.substr(sep + 4));
    if (!f || !g || *f == *g) return std::nullopt;
    return ExpansionTag{*f, *g};
}

}  // namespace

const std::vector<std::string>& all_identity_tags() {
    static const std::vector<std::string> tags = {
        "H_in_E",     "E_in_H",     "P_in_H",      "P_in_E",     "H_in_P",  "E_in_P",
        "Eplus_in_E", "Eplus_in_H", "Eplus_in_P",  "H_in_Eplus", "E_in_Eplus",
        "P_in_Eplus", "HE_conv",    "dH",          "dE",         "HU",      "UF"};
    return tags;
}

std::pair<MonomialSum, MonomialSum> oracle_sides(const std::string& tag, int d, int J) {
    if (auto et = parse_expansion_tag(tag)) {
        MonomialSum lhs = basis_monomials(et->from, d, J);
        MonomialSum rhs;
        for (const auto& [delta, c] : expand_elementary(et->from, et->to, d).terms)
            rhs = rhs.plus(expand_over_pcom(et->to, delta, J).scaled(c));
        return {lhs, rhs};
    }
    if (tag == "HE_conv") {
        MonomialSum lhs;
        for (int k = 0; k <= d; ++k)
            lhs = lhs.plus(basis_monomials(Basis::H, k, J).times(basis_monomials(Basis::E, d - k, J)));
        return {lhs, d == 0 ? MonomialSum::one() : MonomialSum::zero()};
    }
    if (tag == "dH" || tag == "dE") {
        Basis f = tag == "dH" ? Basis::H : Basis::E;
        MonomialSum lhs = basis_monomials(f, d, J).scaled(Rat(d));
        MonomialSum rhs;
        for (int i = 1; i <= d; ++i)
            rhs = rhs.plus(basis_monomials(f, d - i, J).times(basis_monomials(Basis::P, i, J)));
        if (f == Basis::E) rhs = rhs.scaled(Rat(-1));
        return {lhs, rhs};
    }
    if (tag == "HU") {
        MonomialSum lhs = basis_monomials(Basis::H, d, J);
        MonomialSum rhs;
        for (int k = 0; 2 * k <= d; ++k)
            rhs = rhs.plus(adams_pow(basis_monomials(Basis::H, k, J), 2)
                               .times(basis_monomials(Basis::Eplus, d - 2 * k, J)));
        return {lhs, rhs};
    }
    if (tag == "UF") {
        MonomialSum lhs = basis_monomials(Basis::Eplus, d, J);
        MonomialSum rhs;
        for (int k = 0; 2 * k <= d; ++k)
            rhs = rhs.plus(basis_monomials(Basis::H, d - 2 * k, J)
                               .times(adams_pow(basis_monomials(Basis::E, k, J), 2)));
        return {lhs, rhs};
    }
    throw std::invalid_argument("unknown identity tag: " + tag);
}

OracleResult oracle_verify(const std::string& tag, int d, int J) {
    OracleResult res;
    res.identity = tag;
    res.degree = d;
    res.max_label = J;
    auto [lhs, rhs] = oracle_sides(tag, d, J);
    if (lhs == rhs) return res;
    res.ok = false;
    // report the first monomial whose coefficients differ
    auto it = lhs.terms.begin();
    auto jt = rhs.terms.begin();
    while (it != lhs.terms.end() || jt != rhs.terms.end()) {
        if (jt == rhs.terms.end() || (it != lhs.terms.end() && it->first < jt->first)) {
            res.witness = it->first;
            res.lhs = it->second;
            res.rhs = 0;
            return res;
        }
        if (it == lhs.terms.end() || jt->first < it->first) {
            res.witness = jt->first;
            res.lhs = 0;
            res.rhs = jt->second;
            return res;
        }
        if (it->second != jt->second) {
            res.witness = it->first;
            res.lhs = it->second;
            res.rhs = jt->second;
            return res;
        }
        ++it;
        ++jt;
    }
    return res;
}

}  // namespace psym
