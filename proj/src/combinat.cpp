#include "psym/combinat.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace psym {

long long Polycomposition::size() const {
    long long s = 0;
    for (const auto& [r, alpha] : groups)
        for (int a : alpha) s += static_cast<long long>(r) * a;
    return s;
}

int Polycomposition::length() const {
    int l = 0;
    for (const auto& [r, alpha] : groups) l += static_cast<int>(alpha.size());
    return l;
}

std::vector<Block> Polycomposition::blocks() const {
    std::vector<Block> out;
    for (const auto& [r, alpha] : groups)
        for (int a : alpha) out.push_back({a, r});
    return out;
}

const Composition* Polycomposition::group_at(int mult) const {
    for (const auto& [r, alpha] : groups)
        if (r == mult) return &alpha;
    return nullptr;
}

long long TypeIndex::size() const {
    long long s = 0;
    for (const auto& [r, lam] : groups)
        for (int a : lam) s += static_cast<long long>(r) * a;
    return s;
}

int TypeIndex::length() const {
    int l = 0;
    for (const auto& [r, lam] : groups) l += static_cast<int>(lam.size());
    return l;
}

std::vector<Block> TypeIndex::blocks() const {
    std::vector<Block> out;
    for (const auto& [r, lam] : groups)
        for (int a : lam) out.push_back({a, r});
    return out;
}

const Partition* TypeIndex::group_at(int mult) const {
    for (const auto& [r, lam] : groups)
        if (r == mult) return &lam;
    return nullptr;
}

std::vector<long long> TypeIndex::order_key() const {
    std::vector<long long> key;
    key.push_back(size());
    for (const auto& [r, lam] : groups) {
        key.push_back(r);
        key.push_back(static_cast<long long>(lam.size()));  // disambiguates group boundaries
        for (int a : lam) key.push_back(a);
    }
    return key;
}

bool TypeIndex::operator<(const TypeIndex& o) const { return order_key() < o.order_key(); }

std::optional<FamilyKind> family_kind_from_string(const std::string& s) {
    if (s == "par") return FamilyKind::par;
    if (s == "com") return FamilyKind::com;
    if (s == "pcom") return FamilyKind::pcom;
    if (s == "typ") return FamilyKind::typ;
    if (s == "pcom_sqf") return FamilyKind::pcom_sqf;
    if (s == "pcom_P") return FamilyKind::pcom_P;
    if (s == "pcom_E") return FamilyKind::pcom_E;
    if (s == "pcom_H") return FamilyKind::pcom_H;
    if (s == "pcom_dyad") return FamilyKind::pcom_dyad;
    if (s == "pcom_dyad_rows1") return FamilyKind::pcom_dyad_rows1;
    if (s == "pcom_dyad_singular") return FamilyKind::pcom_dyad_singular;
    return std::nullopt;
}

std::string family_kind_to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::par: return "par";
        case FamilyKind::com: return "com";
        case FamilyKind::pcom: return "pcom";
        case FamilyKind::typ: return "typ";
        case FamilyKind::pcom_sqf: return "pcom_sqf";
        case FamilyKind::pcom_P: return "pcom_P";
        case FamilyKind::pcom_E: return "pcom_E";
        case FamilyKind::pcom_H: return "pcom_H";
        case FamilyKind::pcom_dyad: return "pcom_dyad";
        case FamilyKind::pcom_dyad_rows1: return "pcom_dyad_rows1";
        case FamilyKind::pcom_dyad_singular: return "pcom_dyad_singular";
    }
    return "?";
}

Partition sort_composition(const Composition& alpha) {
    Partition lam = alpha;
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    return lam;
}

TypeIndex psort(const Polycomposition& delta) {
    TypeIndex tau;
    for (const auto& [r, alpha] : delta.groups) tau.groups.emplace_back(r, sort_composition(alpha));
    return tau;
}

TypeIndex type_from_blocks(std::vector<Block> blocks) {
    std::map<int, Partition> by_mult;
    for (const Block& b : blocks) by_mult[b.mult].push_back(b.degree);
    TypeIndex tau;
    for (auto& [r, parts] : by_mult) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        tau.groups.emplace_back(r, std::move(parts));
    }
    return tau;
}

Polycomposition pcom_from_groups(std::vector<std::pair<int, Composition>> groups) {
    Polycomposition delta;
    for (auto& [r, alpha] : groups) {
        if (alpha.empty()) continue;
        if (!delta.groups.empty() && delta.groups.back().first >= r)
            throw std::invalid_argument("group multiplicities must be strictly increasing");
        delta.groups.emplace_back(r, std::move(alpha));
    }
    return delta;
}

TypeIndex type_power(const TypeIndex& tau, int r) {
    TypeIndex out;
    for (const auto& [m, lam] : tau.groups) out.groups.emplace_back(m * r, lam);
    return out;
}

Polycomposition pcom_power(const Polycomposition& delta, int r) {
    Polycomposition out;
    for (const auto& [m, alpha] : delta.groups) out.groups.emplace_back(m * r, alpha);
    return out;
}

TypeIndex type_union(const TypeIndex& a, const TypeIndex& b) {
    std::vector<Block> blocks = a.blocks();
    for (const Block& blk : b.blocks()) blocks.push_back(blk);
    return type_from_blocks(std::move(blocks));
}

template <typename T>
static BlockStats block_stats_impl(const T& obj) {
    BlockStats st;
    st.length = obj.length();
    if (!obj.groups.empty()) {
        const auto& [r, parts] = obj.groups.back();
        st.last_block_size = static_cast<long long>(r) * parts.back();
    }
    return st;
}

BlockStats block_stats(const Polycomposition& delta) { return block_stats_impl(delta); }
BlockStats block_stats(const TypeIndex& tau) { return block_stats_impl(tau); }

Int z_partition(const Partition& lambda) {
    std::map<int, int> mult;
    for (int a : lambda) ++mult[a];
    Int z = 1;
    for (const auto& [i, m] : mult) {
        for (int t = 0; t < m; ++t) z *= i;
        for (int t = 2; t <= m; ++t) z *= t;
    }
    return z;
}

Int Z_composition(const Composition& alpha) {
    Int z = 1;
    long long partial = 0;
    for (int a : alpha) {
        partial += a;
        z *= partial;
    }
    return z;
}

Int z_tensor(const TypeIndex& tau) {
    Int z = 1;
    for (const auto& [r, lam] : tau.groups) z *= z_partition(lam);
    return z;
}

std::vector<Partition> enum_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> enum_compositions(int n) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// Distribute weight over multiplicities in increasing order; each selected
// multiplicity r contributes r * |group| to the size.
static void enum_pcom_rec(int rem, int r, std::vector<std::pair<int, Composition>>& cur,
                          std::vector<Polycomposition>& out) {
    if (rem == 0) {
        Polycomposition d;
        d.groups = cur;
        out.push_back(std::move(d));
        return;
    }
    if (r > rem) return;
    enum_pcom_rec(rem, r + 1, cur, out);  // skip multiplicity r
    for (int m = 1; r * m <= rem; ++m) {
        for (const Composition& alpha : enum_compositions(m)) {
            cur.emplace_back(r, alpha);
            enum_pcom_rec(rem - r * m, r + 1, cur, out);
            cur.pop_back();
        }
    }
}

static std::vector<Polycomposition> enum_pcom_all(int n) {
    std::vector<Polycomposition> out;
    std::vector<std::pair<int, Composition>> cur;
    enum_pcom_rec(n, 1, cur, out);
    return out;
}

std::vector<TypeIndex> enum_types(int n) {
    std::vector<TypeIndex> out;
    std::vector<std::pair<int, Partition>> cur;
    auto rec = [&](auto&& self, int rem, int r) -> void {
        if (rem == 0) {
            TypeIndex t;
            t.groups = cur;
            out.push_back(std::move(t));
            return;
        }
        if (r > rem) return;
        self(self, rem, r + 1);
        for (int m = 1; r * m <= rem; ++m) {
            for (const Partition& lam : enum_partitions(m)) {
                cur.emplace_back(r, lam);
                self(self, rem - r * m, r + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

static bool is_power_of_two(int r) { return r > 0 && (r & (r - 1)) == 0; }

bool pcom_family_contains(FamilyKind kind, const Polycomposition& delta) {
    switch (kind) {
        case FamilyKind::pcom:
            return true;
        case FamilyKind::pcom_sqf:
            return delta.groups.empty() ||
                   (delta.groups.size() == 1 && delta.groups[0].first == 1);
        case FamilyKind::pcom_P:
            for (const auto& [r, alpha] : delta.groups)
                if (r != 1 && r != 2) return false;
            return true;
        case FamilyKind::pcom_E:
            for (const auto& [r, alpha] : delta.groups) {
                if (r != 1 && r != 2) return false;
                if (r == 2 && alpha.size() > 1) return false;
            }
            return true;
        case FamilyKind::pcom_H:
            for (const auto& [r, alpha] : delta.groups) {
                if (r != 1 && r != 2) return false;
                if (r == 1 && alpha.size() > 1) return false;
            }
            return true;
        case FamilyKind::pcom_dyad:
            for (const auto& [r, alpha] : delta.groups)
                if (!is_power_of_two(r)) return false;
            return true;
        case FamilyKind::pcom_dyad_rows1:
            for (const auto& [r, alpha] : delta.groups)
                if (!is_power_of_two(r) || alpha.size() > 1) return false;
            return true;
        case FamilyKind::pcom_dyad_singular:
            if (delta.groups.empty()) return true;
            return delta.groups.size() == 1 && is_power_of_two(delta.groups[0].first);
        default:
            throw std::invalid_argument("not a polycomposition family: " +
                                        family_kind_to_string(kind));
    }
}

std::vector<Polycomposition> enum_pcom_family(FamilyKind kind, int n) {
    if (n < 0) return {};
    std::vector<Polycomposition> out;
    auto push = [&](std::vector<std::pair<int, Composition>> groups) {
        out.push_back(pcom_from_groups(std::move(groups)));
    };
    switch (kind) {
        case FamilyKind::pcom:
            return enum_pcom_all(n);
        case FamilyKind::pcom_sqf:
            for (const Composition& alpha : enum_compositions(n)) push({{1, alpha}});
            break;
        case FamilyKind::pcom_P:
            for (int b = 0; 2 * b <= n; ++b)
                for (const Composition& alpha : enum_compositions(n - 2 * b))
                    for (const Composition& beta : enum_compositions(b))
                        push({{1, alpha}, {2, beta}});
            break;
        case FamilyKind::pcom_E:
            for (int b = 0; 2 * b <= n; ++b)
                for (const Composition& alpha : enum_compositions(n - 2 * b)) {
                    if (b == 0)
                        push({{1, alpha}});
                    else
                        push({{1, alpha}, {2, {b}}});
                }
            break;
        case FamilyKind::pcom_H:
            for (int a = 0; a <= n; ++a) {
                if ((n - a) % 2 != 0) continue;
                for (const Composition& beta : enum_compositions((n - a) / 2)) {
                    if (a == 0)
                        push({{2, beta}});
                    else
                        push({{1, {a}}, {2, beta}});
                }
            }
            break;
        case FamilyKind::pcom_dyad: {
            std::vector<std::pair<int, Composition>> cur;
            auto rec = [&](auto&& self, int rem, int r) -> void {
                if (rem == 0) {
                    push(cur);
                    return;
                }
                if (r > rem) return;
                self(self, rem, 2 * r);
                for (int m = 1; r * m <= rem; ++m)
                    for (const Composition& alpha : enum_compositions(m)) {
                        cur.emplace_back(r, alpha);
                        self(self, rem - r * m, 2 * r);
                        cur.pop_back();
                    }
            };
            rec(rec, n, 1);
            break;
        }
        case FamilyKind::pcom_dyad_rows1: {
            std::vector<std::pair<int, Composition>> cur;
            auto rec = [&](auto&& self, int rem, int r) -> void {
                if (rem == 0) {
                    push(cur);
                    return;
                }
                if (r > rem) return;
                self(self, rem, 2 * r);
                for (int m = 1; r * m <= rem; ++m) {
                    cur.emplace_back(r, Composition{m});
                    self(self, rem - r * m, 2 * r);
                    cur.pop_back();
                }
            };
            rec(rec, n, 1);
            break;
        }
        case FamilyKind::pcom_dyad_singular:
            if (n == 0) {
                push({});
                break;
            }
            for (int r = 1; r <= n; r *= 2) {
                if (n % r != 0) continue;
                for (const Composition& alpha : enum_compositions(n / r)) push({{r, alpha}});
            }
            break;
        default:
            throw std::invalid_argument("not a polycomposition family: " +
                                        family_kind_to_string(kind));
    }
    return out;
}

int count_distinct_parts(const Partition& lambda) {
    int dis = 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        if (i == 0 || lambda[i] != lambda[i - 1]) ++dis;
    return dis;
}

}  // namespace psym
