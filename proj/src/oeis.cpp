#include "psym/oeis.hpp"

#include <map>
#include <stdexcept>

#include "psym/combinat.hpp"
#include "psym/expansions.hpp"

namespace psym {

namespace {

// p(n) by the bounded-part recurrence, cached
std::vector<Int>& partition_table(int upto) {
    static std::vector<Int> table = {1};
    int have = static_cast<int>(table.size()) - 1;
    if (upto > have) {
        std::vector<std::vector<Int>> ways(upto + 1, std::vector<Int>(upto + 1, 0));
        for (int k = 0; k <= upto; ++k) ways[0][k] = 1;
        for (int n = 1; n <= upto; ++n)
            for (int k = 1; k <= upto; ++k)
                ways[n][k] = ways[n][k - 1] + (n >= k ? ways[n - k][k] : Int(0));
        table.resize(upto + 1);
        for (int n = 0; n <= upto; ++n) table[n] = ways[n][upto];
    }
    return table;
}

std::vector<Partition> binary_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpow) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = maxpow; p >= 1; p /= 2) {
            if (p > rem) continue;
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    int top = 1;
    while (2 * top <= n) top *= 2;
    rec(rec, n, top);
    return out;
}

Int total_power_of_two_quotients(int d) {
    // p(d) + p(d/2) + p(d/4) + ... over exact divisions
    if (d == 0) return 1;
    Int total = 0;
    for (int step = 1; step <= d && d % step == 0; step *= 2) total += partition_count(d / step);
    return total;
}

}  // namespace

Int partition_count(int n) {
    if (n < 0) return 0;
    auto& table = partition_table(std::max(n, 64));
    return table[n];
}

std::optional<SeqTag> seq_tag_from_string(const std::string& s) {
    for (SeqTag t : all_seq_tags())
        if (seq_tag_to_string(t) == s) return t;
    return std::nullopt;
}

std::string seq_tag_to_string(SeqTag t) {
    switch (t) {
        case SeqTag::A006951: return "A006951";
        case SeqTag::A024786_TE: return "A024786_TE";
        case SeqTag::A025065_TH: return "A025065_TH";
        case SeqTag::A002513_TP: return "A002513_TP";
        case SeqTag::A018819_THsup: return "A018819_THsup";
        case SeqTag::A092119_TEsup: return "A092119_TEsup";
        case SeqTag::A305841_TPsup: return "A305841_TPsup";
    }
    return "?";
}

const std::vector<SeqTag>& all_seq_tags() {
    static const std::vector<SeqTag> tags = {
        SeqTag::A006951,       SeqTag::A024786_TE,    SeqTag::A025065_TH,
        SeqTag::A002513_TP,    SeqTag::A018819_THsup, SeqTag::A092119_TEsup,
        SeqTag::A305841_TPsup,
    };
    return tags;
}

std::vector<Int> sequence(SeqTag tag, int count) {
    if (count < 1) throw std::invalid_argument("sequence length must be >= 1");
    std::vector<Int> out(count);
    switch (tag) {
        case SeqTag::A006951:
            for (int n = 0; n < count; ++n) {
                Int total = 0;
                for (const Partition& lam : enum_partitions(n)) {
                    int exp = static_cast<int>(lam.size()) - count_distinct_parts(lam);
                    total += Int(1) << exp;
                }
                out[n] = total;
            }
            break;
        case SeqTag::A024786_TE:
            for (int d = 0; d < count; ++d) {
                Int total = 0;
                for (int k = 0; d - 2 * k >= 0; ++k) total += partition_count(d - 2 * k);
                out[d] = total;
            }
            break;
        case SeqTag::A025065_TH:
            // palindromes (lambda, a, lambda): the half determines the count
            for (int d = 0; d < count; ++d) {
                Int total = 0;
                for (int b = 0; 2 * b <= d; ++b) total += partition_count(b);
                out[d] = total;
            }
            break;
        case SeqTag::A002513_TP:
            // cubic partitions: marked even parts halve into the second group
            for (int d = 0; d < count; ++d) {
                Int total = 0;
                for (int b = 0; 2 * b <= d; ++b)
                    total += partition_count(d - 2 * b) * partition_count(b);
                out[d] = total;
            }
            break;
        case SeqTag::A018819_THsup:
            for (int d = 0; d < count; ++d)
                out[d] = static_cast<long long>(binary_partitions(d).size());
            break;
        case SeqTag::A092119_TEsup:
            for (int d = 0; d < count; ++d) {
                Int total = 0;
                for (const Partition& lam : binary_partitions(d)) {
                    std::map<int, int> mult;
                    for (int p : lam) ++mult[p];
                    Int prod = 1;
                    for (const auto& [p, m] : mult) prod *= partition_count(m);
                    total += prod;
                }
                out[d] = total;
            }
            break;
        case SeqTag::A305841_TPsup:
            for (int d = 0; d < count; ++d) out[d] = total_power_of_two_quotients(d);
            break;
    }
    return out;
}

long long count_nonzero_types(Basis f, Basis g, int d) {
    return static_cast<long long>(collect_types(expand_elementary(f, g, d)).terms.size());
}

DivisorCheck divisor_identity_check(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    DivisorCheck res{0, 0, 0};
    for (int k = 1; k <= m; ++k) {
        if (m % k != 0) continue;
        Int a = total_power_of_two_quotients(k);
        Int term = Int(k) * (partition_count(k) + ((m / k) % 2 == 0 ? a : -a));
        res.total += term;
        if (term > 0) res.positive += term;
        if (term < 0) res.negative -= term;
    }
    return res;
}

}  // namespace psym
