#include "psym/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace psym {

namespace {

struct Scanner {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000) throw ParseError("integer out of range", start);
            ++pos;
        }
        if (v < 1) throw ParseError("integers must be >= 1", start);
        return static_cast<int>(v);
    }
};

// Expr := "0" | Group+ ; Group := "(" Int ("," Int)* ")" "^" Int
std::vector<std::pair<int, Composition>> parse_groups(const std::string& text) {
    Scanner sc{text};
    if (sc.done()) throw ParseError("empty expression", 0);
    if (sc.peek() == '0') {
        ++sc.pos;
        if (!sc.done()) throw ParseError("trailing input after '0'", sc.pos);
        return {};
    }
    std::vector<std::pair<int, Composition>> groups;
    while (!sc.done()) {
        sc.expect('(');
        Composition entries;
        entries.push_back(sc.integer());
        while (sc.peek() == ',') {
            ++sc.pos;
            entries.push_back(sc.integer());
        }
        sc.expect(')');
        sc.expect('^');
        int mult = sc.integer();
        groups.emplace_back(mult, std::move(entries));
    }
    return groups;
}

}  // namespace

TypeIndex parse_type(const std::string& text) {
    std::map<int, Partition> merged;
    for (auto& [r, entries] : parse_groups(text)) {
        Partition& lam = merged[r];
        lam.insert(lam.end(), entries.begin(), entries.end());
    }
    TypeIndex tau;
    for (auto& [r, lam] : merged) {
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        tau.groups.emplace_back(r, std::move(lam));
    }
    return tau;
}

Polycomposition parse_pcom(const std::string& text) {
    auto groups = parse_groups(text);
    Polycomposition delta;
    for (auto& [r, entries] : groups) {
        if (!delta.groups.empty()) {
            int prev = delta.groups.back().first;
            if (r < prev)
                throw ParseError("multiplicities must be weakly increasing (" +
                                     std::to_string(r) + " after " + std::to_string(prev) + ")",
                                 0);
            if (r == prev) {
                Composition& alpha = delta.groups.back().second;
                alpha.insert(alpha.end(), entries.begin(), entries.end());
                continue;
            }
        }
        delta.groups.emplace_back(r, std::move(entries));
    }
    return delta;
}

template <typename Groups>
static std::string render_groups(const Groups& groups) {
    if (groups.empty()) return "0";
    std::string out;
    for (const auto& [r, parts] : groups) {
        out += '(';
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
        out += ")^";
        out += std::to_string(r);
    }
    return out;
}

std::string render_expr(const TypeIndex& tau) { return render_groups(tau.groups); }
std::string render_expr(const Polycomposition& delta) { return render_groups(delta.groups); }

}  // namespace psym
