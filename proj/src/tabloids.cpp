#include "psym/tabloids.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace psym {

namespace {

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

struct Row {
    int factor;
    int row;
    int len;
};

std::vector<Row> shape_rows(const TypeIndex& sigma) {
    std::vector<Row> rows;
    for (const auto& [r, lam] : sigma.groups)
        for (size_t i = 0; i < lam.size(); ++i)
            rows.push_back({r, static_cast<int>(i), lam[i]});
    return rows;
}

using BlockCounts = std::map<std::pair<int, int>, int>;  // (degree, mult) -> count

BlockCounts block_counts(const TypeIndex& tau) {
    BlockCounts counts;
    for (const Block& b : tau.blocks()) ++counts[{b.degree, b.mult}];
    return counts;
}

bool take(BlockCounts& counts, int degree, int mult) {
    auto it = counts.find({degree, mult});
    if (it == counts.end() || it->second == 0) return false;
    --it->second;
    return true;
}

void put_back(BlockCounts& counts, int degree, int mult) { ++counts[{degree, mult}]; }

struct Enumerator {
    TabloidFamily family;
    std::vector<Row> rows;
    BlockCounts remaining;
    std::vector<Brick> bricks;
    std::vector<Tabloid>* out;
    const TypeIndex* sigma;

    void emit() {
        Tabloid t;
        t.shape = *sigma;
        t.family = family;
        t.bricks = bricks;
        out->push_back(std::move(t));
    }

    // Fill one row left to right. `state` carries the family constraint:
    // doub*: 0 = plain phase, 1 = doublebrick phase (count of doubles in doub_E);
    // dyad*: the previous brick's k (or the row's fixed k for dyad_singular).
    void fill_row(size_t row_idx, int pos, int state, int bricks_in_row) {
        const Row& row = rows[row_idx];
        if (pos == row.len) {
            next_row(row_idx + 1);
            return;
        }
        int space = row.len - pos;
        switch (family) {
            case TabloidFamily::simple:
            case TabloidFamily::brick:
                for (int len = 1; len <= space; ++len) {
                    if (!take(remaining, len, row.factor)) continue;
                    bricks.push_back({row.factor, row.row, pos, len, BrickKind::plain, 0, 0});
                    fill_row(row_idx, pos + len, 0, bricks_in_row + 1);
                    bricks.pop_back();
                    put_back(remaining, len, row.factor);
                }
                break;
            case TabloidFamily::doub:
            case TabloidFamily::doub_E:
            case TabloidFamily::doub_H: {
                bool plain_allowed = state == 0;
                if (family == TabloidFamily::doub_H && bricks_in_row > 0) plain_allowed = false;
                if (plain_allowed) {
                    for (int len = 1; len <= space; ++len) {
                        if (!take(remaining, len, row.factor)) continue;
                        bricks.push_back({row.factor, row.row, pos, len, BrickKind::plain, 0, 0});
                        fill_row(row_idx, pos + len, 0, bricks_in_row + 1);
                        bricks.pop_back();
                        put_back(remaining, len, row.factor);
                    }
                }
                bool double_allowed = !(family == TabloidFamily::doub_E && state >= 1);
                if (double_allowed) {
                    for (int len = 2; len <= space; len += 2) {
                        if (!take(remaining, len / 2, 2 * row.factor)) continue;
                        bricks.push_back({row.factor, row.row, pos, len, BrickKind::doubled, 0, 0});
                        fill_row(row_idx, pos + len, state + 1, bricks_in_row + 1);
                        bricks.pop_back();
                        put_back(remaining, len / 2, 2 * row.factor);
                    }
                }
                break;
            }
            case TabloidFamily::dyad:
            case TabloidFamily::dyad_distinct:
            case TabloidFamily::dyad_singular: {
                int kmin = state;
                for (int k = kmin, p = 1 << kmin; p <= space; ++k, p <<= 1) {
                    if (family == TabloidFamily::dyad_distinct && bricks_in_row > 0 && k == kmin)
                        continue;  // each marking at most once per row
                    if (family == TabloidFamily::dyad_singular && bricks_in_row > 0 && k != kmin)
                        break;  // a row sticks to a single k
                    for (int len = p; len <= space; len += p) {
                        if (!take(remaining, len / p, p * row.factor)) continue;
                        bricks.push_back({row.factor, row.row, pos, len, BrickKind::dyadic, 0, k});
                        fill_row(row_idx, pos + len, k, bricks_in_row + 1);
                        bricks.pop_back();
                        put_back(remaining, len / p, p * row.factor);
                    }
                }
                break;
            }
            default:
                throw std::logic_error("ordered family in unordered enumerator");
        }
    }

    void next_row(size_t row_idx) {
        if (row_idx == rows.size()) {
            emit();
            return;
        }
        fill_row(row_idx, 0, 0, 0);
    }
};

// Blocks of tau in label order: multiplicities ascending, lengths descending
// within a multiplicity (label l is the l-th block of this list).
std::vector<Block> labeled_blocks(const TypeIndex& tau) { return tau.blocks(); }

void enum_ordered(TabloidFamily family, const TypeIndex& sigma, const TypeIndex& tau,
                  std::vector<Tabloid>& out) {
    std::vector<Row> rows = shape_rows(sigma);
    std::vector<Block> blocks = labeled_blocks(tau);
    std::vector<int> fill(rows.size(), 0);
    std::vector<Brick> bricks;
    auto rec = [&](auto&& self, size_t l) -> void {
        if (l == blocks.size()) {
            for (size_t i = 0; i < rows.size(); ++i)
                if (fill[i] != rows[i].len) return;
            Tabloid t;
            t.shape = sigma;
            t.family = family;
            t.bricks = bricks;
            std::sort(t.bricks.begin(), t.bricks.end(), [](const Brick& a, const Brick& b) {
                return std::tie(a.factor, a.row, a.start) < std::tie(b.factor, b.row, b.start);
            });
            out.push_back(std::move(t));
            return;
        }
        const Block& blk = blocks[l];
        int label = static_cast<int>(l) + 1;
        auto place = [&](int factor, int len, BrickKind kind) {
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].factor != factor || fill[i] + len > rows[i].len) continue;
                bricks.push_back({factor, rows[i].row, fill[i], len, kind, label, 0});
                fill[i] += len;
                self(self, l + 1);
                fill[i] -= len;
                bricks.pop_back();
            }
        };
        place(blk.mult, blk.degree, BrickKind::plain);
        if (family == TabloidFamily::odoub && blk.mult % 2 == 0)
            place(blk.mult / 2, 2 * blk.degree, BrickKind::doubled);
    };
    rec(rec, 0);
}

}  // namespace

Block Brick::content_block() const {
    switch (kind) {
        case BrickKind::plain: return {len, factor};
        case BrickKind::doubled: return {len / 2, 2 * factor};
        case BrickKind::dyadic: return {len >> kmark, (1 << kmark) * factor};
    }
    return {};
}

std::optional<TabloidFamily> tabloid_family_from_string(const std::string& s) {
    if (s == "simple") return TabloidFamily::simple;
    if (s == "osimp") return TabloidFamily::osimp;
    if (s == "doub") return TabloidFamily::doub;
    if (s == "doub_E") return TabloidFamily::doub_E;
    if (s == "doub_H") return TabloidFamily::doub_H;
    if (s == "odoub") return TabloidFamily::odoub;
    if (s == "dyad") return TabloidFamily::dyad;
    if (s == "dyad_distinct") return TabloidFamily::dyad_distinct;
    if (s == "dyad_singular") return TabloidFamily::dyad_singular;
    if (s == "brick") return TabloidFamily::brick;
    if (s == "ordered_brick") return TabloidFamily::ordered_brick;
    return std::nullopt;
}

std::string tabloid_family_to_string(TabloidFamily f) {
    switch (f) {
        case TabloidFamily::simple: return "simple";
        case TabloidFamily::osimp: return "osimp";
        case TabloidFamily::doub: return "doub";
        case TabloidFamily::doub_E: return "doub_E";
        case TabloidFamily::doub_H: return "doub_H";
        case TabloidFamily::odoub: return "odoub";
        case TabloidFamily::dyad: return "dyad";
        case TabloidFamily::dyad_distinct: return "dyad_distinct";
        case TabloidFamily::dyad_singular: return "dyad_singular";
        case TabloidFamily::brick: return "brick";
        case TabloidFamily::ordered_brick: return "ordered_brick";
    }
    return "?";
}

TypeIndex Tabloid::content() const {
    std::vector<Block> blocks;
    for (const Brick& b : bricks) blocks.push_back(b.content_block());
    return type_from_blocks(std::move(blocks));
}

std::vector<Tabloid> enum_tabloids(TabloidFamily family, const TypeIndex& sigma,
                                   const TypeIndex& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("shape and content must have equal size");
    std::vector<Tabloid> out;
    if (family == TabloidFamily::osimp || family == TabloidFamily::odoub ||
        family == TabloidFamily::ordered_brick) {
        enum_ordered(family, sigma, tau, out);
    } else {
        Enumerator e{family, shape_rows(sigma), block_counts(tau), {}, &out, &sigma};
        e.next_row(0);
    }
    return out;
}

TabloidWeights tabloid_weights(const Tabloid& t) {
    TabloidWeights w;
    bool all_dyadic = true;
    std::map<std::pair<int, int>, const Brick*> last_in_row;
    for (const Brick& b : t.bricks) {
        if (b.kind == BrickKind::plain) ++w.l1;
        if (b.kind == BrickKind::doubled) ++w.l2;
        if (b.kind != BrickKind::dyadic) all_dyadic = false;
        auto key = std::make_pair(b.factor, b.row);
        auto it = last_in_row.find(key);
        if (it == last_in_row.end() || it->second->start < b.start) last_in_row[key] = &b;
    }
    for (const auto& [key, brick] : last_in_row) w.end_product *= brick->len;
    if (all_dyadic) w.end_product_dyadic = w.end_product;
    return w;
}

Rat coefficient_via_tabloids(Basis f, Basis g, const TypeIndex& sigma, const TypeIndex& tau) {
    int lt = tau.length();
    int ls = sigma.length();
    if ((f == Basis::H && g == Basis::E) || (f == Basis::E && g == Basis::H)) {
        auto ts = enum_tabloids(TabloidFamily::simple, sigma, tau);
        return Rat(sign_pow(lt)) * static_cast<long long>(ts.size());
    }
    if (f == Basis::P && (g == Basis::H || g == Basis::E)) {
        int exponent = g == Basis::H ? lt - ls : lt;
        Int total = 0;
        for (const Tabloid& t : enum_tabloids(TabloidFamily::simple, sigma, tau))
            total += tabloid_weights(t).end_product;
        return Rat(sign_pow(exponent)) * Rat(total);
    }
    if ((f == Basis::H || f == Basis::E) && g == Basis::P) {
        auto ts = enum_tabloids(TabloidFamily::osimp, sigma, tau);
        Rat c = Rat(static_cast<long long>(ts.size())) / Rat(z_tensor(tau));
        return f == Basis::E ? Rat(sign_pow(lt)) * c : c;
    }
    if (f == Basis::Eplus && g == Basis::E) {
        Rat total = 0;
        for (const Tabloid& t : enum_tabloids(TabloidFamily::doub_E, sigma, tau))
            total += sign_pow(tabloid_weights(t).l1);
        return total;
    }
    if (f == Basis::Eplus && g == Basis::H) {
        Rat total = 0;
        for (const Tabloid& t : enum_tabloids(TabloidFamily::doub_H, sigma, tau))
            total += sign_pow(tabloid_weights(t).l2);
        return total;
    }
    if (f == Basis::Eplus && g == Basis::P) {
        Rat total = 0;
        for (const Tabloid& t : enum_tabloids(TabloidFamily::odoub, sigma, tau))
            total += sign_pow(tabloid_weights(t).l2);
        return total / Rat(z_tensor(tau));
    }
    if (f == Basis::E && g == Basis::Eplus) {
        auto ts = enum_tabloids(TabloidFamily::dyad, sigma, tau);
        return Rat(sign_pow(lt)) * static_cast<long long>(ts.size());
    }
    if (f == Basis::H && g == Basis::Eplus) {
        auto ts = enum_tabloids(TabloidFamily::dyad_distinct, sigma, tau);
        return Rat(static_cast<long long>(ts.size()));
    }
    if (f == Basis::P && g == Basis::Eplus) {
        Int total = 0;
        for (const Tabloid& t : enum_tabloids(TabloidFamily::dyad_singular, sigma, tau))
            total += *tabloid_weights(t).end_product_dyadic;
        return Rat(sign_pow(lt - ls)) * Rat(total);
    }
    throw std::invalid_argument("unsupported basis pair");
}

CheckReport crosscheck_matrices(int n) {
    CheckReport rep;
    const Basis bases[] = {Basis::H, Basis::E, Basis::Eplus, Basis::P};
    std::vector<TypeIndex> types = enum_types(n);
    for (Basis f : bases)
        for (Basis g : bases) {
            if (f == g) continue;
            TransitionMatrix m = transition_matrix(f, g, n);
            for (size_t col = 0; col < types.size(); ++col)
                for (size_t row = 0; row < types.size(); ++row) {
                    Rat via_tab = coefficient_via_tabloids(f, g, types[col], types[row]);
                    if (via_tab != m.entries[row][col])
                        rep.fail("(" + basis_to_string(f) + "," + basis_to_string(g) +
                                 ") sigma=" + std::to_string(col) + " tau=" + std::to_string(row) +
                                 ": tabloids " + rat_to_string(via_tab) + " vs expansion " +
                                 rat_to_string(m.entries[row][col]));
                }
        }
    return rep;
}

}  // namespace psym
