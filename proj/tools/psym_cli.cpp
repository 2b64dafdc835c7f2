#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "psym/combinat.hpp"
#include "psym/expansions.hpp"
#include "psym/involutions.hpp"
#include "psym/notation.hpp"
#include "psym/oeis.hpp"
#include "psym/tabloids.hpp"

using json = nlohmann::json;
using namespace psym;

namespace {

constexpr const char* kEngineVersion = "1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Basis parse_basis(const std::string& s) {
    auto b = basis_from_string(s);
    if (!b) throw UsageError("unknown basis '" + s + "' (expected H, E, Eplus/E+, or P)");
    return *b;
}

json rational_json(const Rat& r) {
    return json{{"num", int_to_ll(rat_num(r))}, {"den", int_to_ll(rat_den(r))}};
}

json monomial_sum_json(const MonomialSum& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms) {
        json vars = json::array();
        for (const auto& [i, j, e] : m.vars) vars.push_back(json::array({i, j, e}));
        terms.push_back(json{{"vars", vars},
                             {"num", int_to_ll(rat_num(c))},
                             {"den", int_to_ll(rat_den(c))}});
    }
    return terms;
}

// Output is accumulated in full before any file is touched.
void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << text;
    }
    std::filesystem::rename(tmp, out_path);
}

std::string rat_latex(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    std::string sign = r < 0 ? "-" : "";
    Rat a = r < 0 ? Rat(-r) : r;
    return sign + "\\frac{" + rat_num(a).str() + "}{" + rat_den(a).str() + "}";
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char byte : data) {
        h ^= byte;
        h *= 1099511628211ull;
    }
    return h;
}

// ---- matrix serialization and cache ----------------------------------------

json matrix_payload(const TransitionMatrix& m) {
    json types = json::array();
    for (const TypeIndex& t : m.types) types.push_back(render_expr(t));
    json entries = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const Rat& v : row)
            r.push_back(json::array({int_to_ll(rat_num(v)), int_to_ll(rat_den(v))}));
        entries.push_back(std::move(r));
    }
    return json{{"version", kEngineVersion},
                {"from", basis_to_string(m.from)},
                {"to", basis_to_string(m.to)},
                {"n", m.n},
                {"types", types},
                {"entries", entries}};
}

TransitionMatrix matrix_from_payload(const json& j) {
    TransitionMatrix m;
    m.from = parse_basis(j.at("from").get<std::string>());
    m.to = parse_basis(j.at("to").get<std::string>());
    m.n = j.at("n").get<int>();
    for (const auto& t : j.at("types")) m.types.push_back(parse_type(t.get<std::string>()));
    for (const auto& row : j.at("entries")) {
        std::vector<Rat> r;
        for (const auto& v : row)
            r.emplace_back(Int(v[0].get<long long>()), Int(v[1].get<long long>()));
        m.entries.push_back(std::move(r));
    }
    return m;
}

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("PSYM_CACHE_DIR")) return env;
    return ".psym-cache";
}

TransitionMatrix cached_matrix(Basis f, Basis g, int n) {
    std::filesystem::path dir = cache_dir();
    std::filesystem::path file =
        dir / ("matrix_" + basis_to_string(f) + "_" + basis_to_string(g) + "_" +
               std::to_string(n) + ".json");
    std::error_code ec;
    if (std::filesystem::exists(file, ec)) {
        try {
            std::ifstream in(file);
            json j = json::parse(in);
            std::string checksum = j.at("checksum").get<std::string>();
            json payload = j.at("payload");
            if (payload.at("version") == kEngineVersion &&
                checksum == std::to_string(fnv1a(payload.dump())))
                return matrix_from_payload(payload);
        } catch (...) {
            // unreadable or stale cache entries are recomputed below
        }
    }
    TransitionMatrix m = transition_matrix(f, g, n);
    json payload = matrix_payload(m);
    json wrapped = {{"payload", payload}, {"checksum", std::to_string(fnv1a(payload.dump()))}};
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << wrapped.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, file, ec);
    return m;
}

std::string matrix_csv(const TransitionMatrix& m) {
    // type labels contain commas, so they are quoted
    std::ostringstream out;
    for (const TypeIndex& t : m.types) out << ",\"" << render_expr(t) << "\"";
    out << "\n";
    for (size_t r = 0; r < m.types.size(); ++r) {
        out << "\"" << render_expr(m.types[r]) << "\"";
        for (size_t c = 0; c < m.types.size(); ++c) out << "," << rat_to_string(m.entries[r][c]);
        out << "\n";
    }
    return out.str();
}

std::string matrix_text(const TransitionMatrix& m) {
    std::vector<std::string> labels;
    size_t w = 0;
    for (const TypeIndex& t : m.types) {
        labels.push_back(render_expr(t));
        w = std::max(w, labels.back().size());
    }
    std::vector<size_t> colw(m.types.size());
    for (size_t c = 0; c < m.types.size(); ++c) {
        colw[c] = labels[c].size();
        for (size_t r = 0; r < m.types.size(); ++r)
            colw[c] = std::max(colw[c], rat_to_string(m.entries[r][c]).size());
    }
    std::ostringstream out;
    out << "M(" << basis_to_string(m.from) << "," << basis_to_string(m.to) << ")  n=" << m.n
        << "\n";
    out << std::string(w, ' ');
    for (size_t c = 0; c < m.types.size(); ++c) {
        out << "  ";
        out.width(static_cast<std::streamsize>(colw[c]));
        out << labels[c];
    }
    out << "\n";
    for (size_t r = 0; r < m.types.size(); ++r) {
        out.width(static_cast<std::streamsize>(w));
        out << labels[r];
        for (size_t c = 0; c < m.types.size(); ++c) {
            out << "  ";
            out.width(static_cast<std::streamsize>(colw[c]));
            out << rat_to_string(m.entries[r][c]);
        }
        out << "\n";
    }
    return out.str();
}

std::string matrix_latex(const TransitionMatrix& m) {
    std::ostringstream out;
    size_t k = m.types.size();
    out << "% M(" << basis_to_string(m.from) << "," << basis_to_string(m.to) << "), n = " << m.n
        << "\n";
    out << "\\begin{array}{r|" << std::string(k, 'r') << "}\n";
    for (const TypeIndex& t : m.types)
        out << " & \\rotatebox{90}{$" << render_expr(t) << "$}";
    out << " \\\\\n\\hline\n";
    for (size_t r = 0; r < k; ++r) {
        out << render_expr(m.types[r]);
        for (size_t c = 0; c < k; ++c) out << " & " << rat_latex(m.entries[r][c]);
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

// Reorder rows and columns to the labels listed in a file, one per line.
TransitionMatrix reorder(const TransitionMatrix& m, const std::string& order_file) {
    std::ifstream in(order_file);
    if (!in) throw UsageError("cannot read order file " + order_file);
    std::vector<TypeIndex> order;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        order.push_back(parse_type(line));
    }
    if (order.size() != m.types.size())
        throw UsageError("order file must list exactly " + std::to_string(m.types.size()) +
                         " types");
    TransitionMatrix out = m;
    out.types = order;
    for (size_t r = 0; r < order.size(); ++r)
        for (size_t c = 0; c < order.size(); ++c) out.entries[r][c] = m.at(order[r], order[c]);
    return out;
}

json tabloid_json(const Tabloid& t) {
    json bricks = json::array();
    for (const Brick& b : t.bricks) {
        json jb = {{"factor", b.factor}, {"row", b.row}, {"start", b.start}, {"len", b.len}};
        switch (b.kind) {
            case BrickKind::plain: jb["kind"] = "plain"; break;
            case BrickKind::doubled: jb["kind"] = "double"; break;
            case BrickKind::dyadic:
                jb["kind"] = "k_brick";
                jb["k"] = b.kmark;
                break;
        }
        if (b.label > 0) jb["label"] = b.label;
        bricks.push_back(std::move(jb));
    }
    TabloidWeights w = tabloid_weights(t);
    json jw = {{"l1", w.l1}, {"l2", w.l2}, {"end_product", int_to_ll(w.end_product)}};
    if (w.end_product_dyadic)
        jw["end_product_dyadic"] = int_to_ll(*w.end_product_dyadic);
    return json{{"shape", render_expr(t.shape)},
                {"content", render_expr(t.content())},
                {"bricks", bricks},
                {"weights", jw}};
}

json config_json(const TabConfig& c) {
    if (c.kind == TabConfig::Kind::pair)
        return json{{"first", c.first.to_string()}, {"second", c.second.to_string()}};
    return json(c.layered.to_string());
}

// ---- subcommands ------------------------------------------------------------

int run_enumerate(const std::string& kind_str, int n, const std::string& format,
                  const std::string& out_path) {
    auto kind = family_kind_from_string(kind_str);
    if (!kind) throw UsageError("unknown family kind '" + kind_str + "'");
    std::vector<std::string> items;
    switch (*kind) {
        case FamilyKind::par:
            for (const Partition& p : enum_partitions(n))
                items.push_back(render_expr(TypeIndex{{{1, p}}}));
            break;
        case FamilyKind::com:
            for (const Composition& a : enum_compositions(n))
                items.push_back(render_expr(Polycomposition{{{1, a}}}));
            break;
        case FamilyKind::typ:
            for (const TypeIndex& t : enum_types(n)) items.push_back(render_expr(t));
            break;
        default:
            for (const Polycomposition& d : enum_pcom_family(*kind, n))
                items.push_back(render_expr(d));
            break;
    }
    std::ostringstream out;
    if (format == "json") {
        json j = {{"kind", kind_str}, {"n", n}, {"count", items.size()}, {"items", items}};
        out << j.dump(1) << "\n";
    } else {
        for (const std::string& s : items) out << s << "\n";
    }
    deliver(out.str(), out_path);
    return 0;
}

int run_expand(const std::string& from, const std::string& to, int d, const std::string& source,
               bool by_type, const std::string& format, const std::string& out_path) {
    Basis f = parse_basis(from);
    Basis g = parse_basis(to);
    json terms = json::array();
    std::ostringstream text;
    std::string source_label;
    if (!source.empty()) {
        TypeIndex sigma = parse_type(source);
        source_label = render_expr(sigma);
        TypeExpansion e = expand_type_element(f, g, sigma);
        for (const auto& [tau, c] : e.terms) {
            terms.push_back(json{{"type", render_expr(tau)},
                                 {"num", int_to_ll(rat_num(c))},
                                 {"den", int_to_ll(rat_den(c))}});
            text << render_expr(tau) << "  " << rat_to_string(c) << "\n";
        }
    } else {
        source_label = "degree " + std::to_string(d);
        PcomExpansion raw = expand_elementary(f, g, d);
        if (by_type) {
            TypeExpansion e = collect_types(raw);
            source_label = "(" + std::to_string(d) + ")^1";
            for (const auto& [tau, c] : e.terms) {
                terms.push_back(json{{"type", render_expr(tau)},
                                     {"num", int_to_ll(rat_num(c))},
                                     {"den", int_to_ll(rat_den(c))}});
                text << render_expr(tau) << "  " << rat_to_string(c) << "\n";
            }
        } else {
            for (const auto& [delta, c] : raw.terms) {
                terms.push_back(json{{"pcom", render_expr(delta)},
                                     {"num", int_to_ll(rat_num(c))},
                                     {"den", int_to_ll(rat_den(c))}});
                text << render_expr(delta) << "  " << rat_to_string(c) << "\n";
            }
        }
    }
    if (format == "json") {
        json j = {{"from", basis_to_string(f)},
                  {"to", basis_to_string(g)},
                  {"source", source_label},
                  {"terms", terms}};
        deliver(j.dump(1) + "\n", out_path);
    } else {
        deliver(text.str(), out_path);
    }
    return 0;
}

int run_matrix(const std::string& from, const std::string& to, int n, const std::string& format,
               const std::string& order, const std::string& out_path, bool no_cache) {
    Basis f = parse_basis(from);
    Basis g = parse_basis(to);
    TransitionMatrix m = no_cache ? transition_matrix(f, g, n) : cached_matrix(f, g, n);
    if (order != "canonical") m = reorder(m, order);
    std::string text;
    if (format == "json")
        text = matrix_payload(m).dump(1) + "\n";
    else if (format == "csv")
        text = matrix_csv(m);
    else if (format == "latex")
        text = matrix_latex(m);
    else
        text = matrix_text(m);
    deliver(text, out_path);
    return 0;
}

int run_verify(const std::string& identity, int max_d, int labels, const std::string& out_path) {
    std::vector<std::string> tags;
    if (identity == "all")
        tags = all_identity_tags();
    else
        tags.push_back(identity);
    std::ostringstream out;
    bool all_ok = true;
    for (const std::string& tag : tags)
        for (int d = 0; d <= max_d; ++d) {
            int J = labels > 0 ? labels : std::max(d, 1);
            OracleResult res = oracle_verify(tag, d, J);
            out << (res.ok ? "ok   " : "FAIL ") << tag << "  d=" << d << "  labels=" << J;
            if (!res.ok && res.witness) {
                out << "  witness " << res.witness->to_string() << ": " << rat_to_string(res.lhs)
                    << " vs " << rat_to_string(res.rhs);
                all_ok = false;
            }
            out << "\n";
        }
    deliver(out.str(), out_path);
    return all_ok ? 0 : 1;
}

int run_tabloids(const std::string& family, const std::string& shape, const std::string& content,
                 const std::string& format, const std::string& out_path) {
    auto fam = tabloid_family_from_string(family);
    if (!fam) throw UsageError("unknown tabloid family '" + family + "'");
    TypeIndex sigma = parse_type(shape);
    TypeIndex tau = parse_type(content);
    auto ts = enum_tabloids(*fam, sigma, tau);
    if (format == "json") {
        json arr = json::array();
        for (const Tabloid& t : ts) arr.push_back(tabloid_json(t));
        json j = {{"family", family},
                  {"shape", render_expr(sigma)},
                  {"content", render_expr(tau)},
                  {"count", ts.size()},
                  {"tabloids", arr}};
        deliver(j.dump(1) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << ts.size() << " tabloid(s)\n";
        for (const Tabloid& t : ts) {
            for (const Brick& b : t.bricks) {
                out << "  factor " << b.factor << " row " << b.row << " start " << b.start
                    << " len " << b.len;
                if (b.kind == BrickKind::doubled) out << " double";
                if (b.kind == BrickKind::dyadic) out << " k=" << b.kmark;
                if (b.label > 0) out << " label " << b.label;
                out << "\n";
            }
            out << "  --\n";
        }
        deliver(out.str(), out_path);
    }
    return 0;
}

int run_oeis(const std::string& seq, int count, const std::string& format,
             const std::string& out_path) {
    auto tag = seq_tag_from_string(seq);
    if (!tag) throw UsageError("unknown sequence tag '" + seq + "'");
    std::vector<Int> vals = sequence(*tag, count);
    auto expansion_count = [&](int d) -> long long {
        switch (*tag) {
            case SeqTag::A006951:
                return static_cast<long long>(enum_pcom_family(FamilyKind::pcom, d).size());
            case SeqTag::A024786_TE: return count_nonzero_types(Basis::Eplus, Basis::E, d);
            case SeqTag::A025065_TH: return count_nonzero_types(Basis::Eplus, Basis::H, d);
            case SeqTag::A002513_TP: return count_nonzero_types(Basis::Eplus, Basis::P, d);
            case SeqTag::A018819_THsup: return count_nonzero_types(Basis::H, Basis::Eplus, d);
            case SeqTag::A092119_TEsup: return count_nonzero_types(Basis::E, Basis::Eplus, d);
            case SeqTag::A305841_TPsup: return count_nonzero_types(Basis::P, Basis::Eplus, d);
        }
        return -1;
    };
    // expansions get expensive past desk scale; cross-check a bounded prefix
    int check_upto = std::min(count - 1, 12);
    std::ostringstream text;
    json rows = json::array();
    bool all_match = true;
    for (int d = 0; d < count; ++d) {
        bool checked = d <= check_upto;
        long long cnt = checked ? expansion_count(d) : -1;
        bool match = !checked || Int(cnt) == vals[d];
        all_match = all_match && match;
        text << d << "\t" << vals[d] << "\t" << (checked ? std::to_string(cnt) : "-") << "\t"
             << (checked ? (match ? "ok" : "MISMATCH") : "formula-only") << "\n";
        json row = {{"d", d}, {"value", int_to_ll(vals[d])}};
        if (checked) {
            row["expansion_count"] = cnt;
            row["match"] = match;
        } else {
            row["note"] = "formula-only";
        }
        rows.push_back(std::move(row));
    }
    if (format == "json")
        deliver(json{{"seq", seq}, {"rows", rows}}.dump(1) + "\n", out_path);
    else
        deliver("d\tvalue\texpansion\tmatch\n" + text.str(), out_path);
    return all_match ? 0 : 1;
}

int run_involution(const std::string& name_str, int d, int labels, bool trace,
                   const std::string& out_path) {
    auto name = involution_from_string(name_str);
    if (!name) throw UsageError("unknown involution '" + name_str + "'");
    int J = labels > 0 ? labels : std::max(d, 1);
    std::ostringstream out;
    if (trace) {
        json steps = json::array();
        for (const TabConfig& x : enum_domain(*name, d, J)) {
            ApplyResult r = apply(*name, x);
            steps.push_back(json{
                {"input", config_json(x)}, {"rule", r.rule}, {"output", config_json(r.out)}});
        }
        out << json{{"name", name_str}, {"d", d}, {"labels", J}, {"steps", steps}}.dump(1)
            << "\n";
        deliver(out.str(), out_path);
        return 0;
    }
    InvolutionReport rep = check_involution(*name, d, J);
    out << (rep.ok ? "ok   " : "FAIL ") << rep.name << "  d=" << d << "  labels=" << J
        << "  domain=" << rep.domain_size << "  fixed=" << rep.fixed_count << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
    deliver(out.str(), out_path);
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact transition-matrix calculator for the plethystic bases H, E, E+, P"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* c_enum = app.add_subcommand("enumerate", "list a combinatorial family");
    std::string kind;
    int n = 0;
    c_enum->add_option("--kind", kind, "par, com, pcom, typ, pcom_sqf, pcom_P, pcom_E, pcom_H, "
                                       "pcom_dyad, pcom_dyad_rows1, pcom_dyad_singular")
        ->required();
    c_enum->add_option("--n", n, "size")->required()->check(CLI::NonNegativeNumber);

    auto* c_expand = app.add_subcommand("expand", "expand one basis element in another basis");
    std::string from, to, source;
    int degree = -1;
    bool by_type = false;
    c_expand->add_option("--from", from)->required();
    c_expand->add_option("--to", to)->required();
    c_expand->add_option("--d", degree, "degree of a single generator");
    c_expand->add_option("--source", source, "type expression such as \"(3,1)^1\"");
    c_expand->add_flag("--by-type", by_type, "collect polycomposition terms by type");

    auto* c_matrix = app.add_subcommand("matrix", "full transition matrix at size n");
    std::string order = "canonical";
    bool no_cache = false;
    c_matrix->add_option("--from", from)->required();
    c_matrix->add_option("--to", to)->required();
    c_matrix->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    c_matrix->add_option("--order", order, "canonical, or a file of type labels");
    c_matrix->add_flag("--no-cache", no_cache, "skip the matrix cache");

    auto* c_verify = app.add_subcommand("verify", "check identities against the monomial oracle");
    std::string identity = "all";
    int max_d = 4, labels = 0;
    c_verify->add_option("--identity", identity, "identity tag or 'all'");
    c_verify->add_option("--max-d", max_d)->required()->check(CLI::NonNegativeNumber);
    c_verify->add_option("--labels", labels, "label bound (default: the degree)");

    auto* c_tab = app.add_subcommand("tabloids", "list tilings of a shape by content");
    std::string family, shape, content;
    c_tab->add_option("--family", family)->required();
    c_tab->add_option("--shape", shape)->required();
    c_tab->add_option("--content", content)->required();

    auto* c_oeis = app.add_subcommand("oeis", "sequence values against expansion counts");
    std::string seq;
    int count = 12;
    c_oeis->add_option("--seq", seq)->required();
    c_oeis->add_option("--count", count)->check(CLI::PositiveNumber);

    auto* c_inv = app.add_subcommand("involution", "check or trace a tableau map");
    std::string inv_name;
    int inv_d = 0;
    bool trace = false;
    c_inv->add_option("--name", inv_name)->required();
    c_inv->add_option("--d", inv_d)->required()->check(CLI::NonNegativeNumber);
    c_inv->add_option("--labels", labels, "label bound (default: the degree)");
    c_inv->add_flag("--trace", trace, "emit the full step log as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (c_enum->parsed()) return run_enumerate(kind, n, format, out_path);
        if (c_expand->parsed()) {
            if (source.empty() && degree < 0)
                throw UsageError("expand requires --d (a nonnegative degree) or --source");
            if (!source.empty() && degree >= 0)
                throw UsageError("expand takes --d or --source, not both");
            return run_expand(from, to, degree, source, by_type, format, out_path);
        }
        if (c_matrix->parsed()) return run_matrix(from, to, n, format, order, out_path, no_cache);
        if (c_verify->parsed()) return run_verify(identity, max_d, labels, out_path);
        if (c_tab->parsed()) return run_tabloids(family, shape, content, format, out_path);
        if (c_oeis->parsed()) return run_oeis(seq, count, format, out_path);
        if (c_inv->parsed()) return run_involution(inv_name, inv_d, labels, trace, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
