#include "ualg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ualg/errors.hpp"

namespace ualg {

namespace {

struct Token {
    std::string text;
    int line = 0, column = 0;
};

/// Whitespace-splitting tokenizer that remembers positions for diagnostics.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::string current;
    int tok_line = 0, tok_column = 0;
    auto flush = [&]() {
        if (!current.empty()) {
            out.push_back({current, tok_line, tok_column});
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            ++line;
            column = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            if (current.empty()) {
                tok_line = line;
                tok_column = column;
            }
            current.push_back(c);
        }
        ++column;
    }
    flush();
    return out;
}

[[noreturn]] void fail(const Token& at, const std::string& message) {
    throw input_error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message);
}

bool parse_int(const std::string& text, long long& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    for (char c : text) {
        out = out * 10 + (c - '0');
        if (out > 1'000'000'000) return false;
    }
    return true;
}

} // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
    std::vector<Token> tokens = tokenize(text);
    std::size_t pos = 0;
    auto eof_token = [&]() {
        return tokens.empty() ? Token{"", 1, 1}
                              : Token{"", tokens.back().line, tokens.back().column +
                                              static_cast<int>(tokens.back().text.size())};
    };
    auto next = [&](const char* what) -> const Token& {
        if (pos >= tokens.size()) {
            static Token t;
            t = eof_token();
            fail(t, std::string("unexpected end of file, expected ") + what);
        }
        return tokens[pos++];
    };

    const Token& kw = next("'algebra'");
    if (kw.text != "algebra") fail(kw, "expected 'algebra <name>'");
    std::string name = next("algebra name").text;

    const Token& sz = next("'size'");
    if (sz.text != "size") fail(sz, "expected 'size <n>'");
    const Token& sv = next("size value");
    long long n = 0;
    if (!parse_int(sv.text, n) || n <= 0) fail(sv, "size must be a positive integer");

    std::vector<std::string> element_names;
    std::vector<OpSymbol> ops;
    std::vector<std::vector<Element>> tables;

    auto element_index = [&](const Token& t) -> Element {
        long long v = 0;
        if (parse_int(t.text, v)) {
            if (v >= n) fail(t, "element " + t.text + " out of range for size " +
                                    std::to_string(n));
            return static_cast<Element>(v);
        }
        auto it = std::find(element_names.begin(), element_names.end(), t.text);
        if (it == element_names.end()) fail(t, "unknown element '" + t.text + "'");
        return static_cast<Element>(it - element_names.begin());
    };

    while (pos < tokens.size()) {
        const Token& section = tokens[pos++];
        if (section.text == "elements") {
            if (!element_names.empty()) fail(section, "duplicate 'elements' section");
            for (long long i = 0; i < n; ++i) {
                const Token& t = next("element name");
                if (std::find(element_names.begin(), element_names.end(), t.text) !=
                    element_names.end())
                    fail(t, "duplicate element name '" + t.text + "'");
                element_names.push_back(t.text);
            }
        } else if (section.text == "op") {
            const Token& op_name = next("operation name");
            for (const OpSymbol& existing : ops)
                if (existing.name == op_name.text)
                    fail(op_name, "duplicate operation name '" + op_name.text + "'");
            const Token& arity_tok = next("arity");
            long long arity = 0;
            if (!parse_int(arity_tok.text, arity)) fail(arity_tok, "arity must be a nonnegative integer");
            std::size_t len = 1;
            for (long long i = 0; i < arity; ++i) {
                len *= static_cast<std::size_t>(n);
                if (len > 100'000'000) fail(arity_tok, "operation table too large");
            }
            std::vector<Element> table(len);
            for (std::size_t i = 0; i < len; ++i) table[i] = element_index(next("table entry"));
            ops.push_back({op_name.text, static_cast<int>(arity)});
            tables.push_back(std::move(table));
        } else {
            fail(section, "expected 'elements' or 'op', got '" + section.text + "'");
        }
    }

    return AlgebraFile{FiniteAlgebra(name, static_cast<int>(n), Signature(std::move(ops)),
                                     std::move(tables)),
                       std::move(element_names)};
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_file(buffer.str());
}

std::string serialize_algebra(const AlgebraFile& file) {
    const FiniteAlgebra& alg = file.algebra;
    std::ostringstream out;
    out << "algebra " << alg.name() << "\n";
    out << "size " << alg.size() << "\n";
    if (!file.element_names.empty()) {
        out << "elements";
        for (const std::string& name : file.element_names) out << ' ' << name;
        out << "\n";
    }
    const Signature& sig = alg.signature();
    for (int op = 0; op < sig.count(); ++op) {
        out << "op " << sig.name(op) << ' ' << sig.arity(op) << "\n";
        const auto& table = alg.table(op);
        const std::size_t row = sig.arity(op) >= 1 ? static_cast<std::size_t>(alg.size()) : 1;
        for (std::size_t i = 0; i < table.size(); ++i) {
            out << table[i];
            out << ((i % row == row - 1) ? '\n' : ' ');
        }
    }
    return out.str();
}

std::string format_blocks(const Congruence& c) {
    std::ostringstream out;
    bool first_block = true;
    for (const auto& block : c.blocks()) {
        if (!first_block) out << " | ";
        first_block = false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out << ' ';
            out << block[i];
        }
    }
    return out.str();
}

std::vector<ElementPair> parse_pair_list(std::string_view text, int universe) {
    std::vector<ElementPair> out;
    std::string item;
    std::istringstream stream{std::string(text)};
    while (std::getline(stream, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw input_error("pair '" + item + "' must look like a-b");
        long long a = 0, b = 0;
        if (!parse_int(item.substr(0, dash), a) || !parse_int(item.substr(dash + 1), b))
            throw input_error("pair '" + item + "' must be two nonnegative integers");
        if (a >= universe || b >= universe)
            throw input_error("pair '" + item + "' is out of range for size " +
                              std::to_string(universe));
        out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
    }
    return out;
}

namespace {

Json congruence_list_json(const ConLattice& lat) {
    Json list = Json::array();
    for (int i = 0; i < lat.size(); ++i) {
        Json c;
        c["index"] = i;
        c["blocks"] = lat.members[i].blocks();
        list.push_back(std::move(c));
    }
    return list;
}

Json header(const AlgebraFile& file, const char* kind) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["report"] = kind;
    j["algebra"] = file.algebra.name();
    j["size"] = file.algebra.size();
    return j;
}

} // namespace

Json con_report(const AlgebraFile& file, const ConLattice& lat) {
    Json j = header(file, "con");
    j["congruences"] = congruence_list_json(lat);
    j["principal"] = lat.principal;
    j["delta"] = lat.delta;
    j["nabla"] = lat.nabla;
    Json cover = Json::array();
    for (int i = 0; i < lat.size(); ++i)
        for (int k = 0; k < lat.size(); ++k) {
            if (i == k || !lat.leq(i, k)) continue;
            bool covers = true;
            for (int mid = 0; mid < lat.size(); ++mid)
                if (mid != i && mid != k && lat.leq(i, mid) && lat.leq(mid, k)) {
                    covers = false;
                    break;
                }
            if (covers) cover.push_back(Json::array({i, k}));
        }
    j["cover_edges"] = std::move(cover);
    return j;
}

Json commutator_report(const AlgebraFile& file, const ConLattice& lat, const Congruence& alpha,
                       const Congruence& beta, const Congruence& value) {
    Json j = header(file, "commutator");
    j["alpha"] = format_blocks(alpha);
    j["beta"] = format_blocks(beta);
    j["commutator"] = format_blocks(value);
    j["commutator_index"] = lat.index_of(value);
    return j;
}

Json spectrum_report(const AlgebraFile& file, const ConLattice& lat, const CommutatorTable& table,
                     const SpectrumReport& spec) {
    Json j = header(file, "spectrum");
    j["congruences"] = congruence_list_json(lat);
    j["spec"] = spec.spec;
    j["min"] = spec.min;
    j["max"] = spec.max;
    j["radical_of_delta"] = spec.radical_of_delta;
    j["semiprime"] = spec.semiprime;

    Json radicals = Json::array();
    for (int i = 0; i < lat.size(); ++i) radicals.push_back(radical_index(lat, spec, i));
    j["radical"] = std::move(radicals);

    Topology min_topology = stone_topology(file.algebra, lat, spec, SpectrumPoints::Min);
    Json topo;
    topo["points"] = min_topology.points;
    topo["opens"] = min_topology.opens;
    topo["hausdorff"] = topology_hausdorff(min_topology);
    topo["all_clopen"] = topology_all_clopen(min_topology);
    topo["compact"] = true; // finite space
    j["min_topology"] = std::move(topo);
    (void)table;
    return j;
}

Json classification_json(const AlgebraFile& file, const ConLattice& lat,
                         const ClassificationReport& report) {
    Json j = header(file, "classify");
    j["abelian"] = report.abelian;
    j["semiprime"] = report.semiprime;
    j["hyperarchimedean"] = report.hyperarchimedean;
    j["baer"] = report.baer;
    j["strongly_baer"] = report.strongly_baer;
    Json center = Json::array();
    for (int i : report.boolean_center_members) center.push_back(format_blocks(lat.members[i]));
    j["boolean_center"] = std::move(center);
    Json flags;
    flags["commutative"] = report.flags.commutative;
    flags["join_distributive"] = report.flags.join_distributive;
    flags["meets_intersection"] = report.flags.meets_intersection;
    flags["top_neutral"] = report.flags.top_neutral;
    flags["top_compact"] = report.flags.top_compact;
    flags["top_idempotent"] = report.flags.top_idempotent;
    j["flags"] = std::move(flags);
    j["compact_equals_all_congruences"] = report.compact_equals_all;
    j["principal_commutators"] = report.principal_commutators;
    j["compact_commutators"] = report.compact_commutators;
    j["implications_checked"] = report.implications_checked;
    if (report.implications_checked) j["implications_hold"] = report.implications_hold;
    return j;
}

namespace {

Json verdict_json(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Skipped: return "skipped";
        case Verdict::Violation: return "VIOLATION";
    }
    return "unknown";
}

Json optional_bool(const std::optional<bool>& b) {
    if (b.has_value()) return *b;
    return nullptr;
}

} // namespace

Json extension_report(const AlgebraFile& file, const ExtensionContext& cx,
                      const ExtensionAnalysis& analysis) {
    Json j = header(file, "extension");
    j["sub"] = cx.ext.sub;
    j["sub_size"] = cx.ext.induced.size();
    j["con_a"] = cx.lat_a.size();
    j["con_b"] = cx.lat_b.size();
    j["semiprime_a"] = analysis.semiprime_a;
    j["semiprime_b"] = analysis.semiprime_b;
    j["admissible"] = analysis.admissible;
    j["m_extension"] = analysis.m_extension;

    Json gamma;
    gamma["total"] = analysis.gamma.total;
    gamma["map"] = analysis.gamma.map;
    gamma["surjective"] = optional_bool(analysis.gamma.surjective);
    gamma["injective"] = optional_bool(analysis.gamma.injective);
    gamma["continuous"] = optional_bool(analysis.gamma.continuous);
    gamma["homeomorphism"] = optional_bool(analysis.gamma.homeomorphism);
    j["gamma"] = std::move(gamma);

    j["rigid"] = analysis.rigid;
    j["quasirigid"] = analysis.quasirigid;
    j["weak_rigid"] = analysis.weak_rigid;
    j["r"] = analysis.r_ext;
    j["quasi_r"] = analysis.quasi_r;
    j["weak_r"] = analysis.weak_r;
    j["r_star"] = analysis.r_star;
    j["quasi_r_star"] = analysis.quasi_r_star;
    j["weak_r_star"] = analysis.weak_r_star;

    Json suite = Json::array();
    for (const TheoremOutcome& o : analysis.theorems) {
        Json entry;
        entry["name"] = o.name;
        entry["verdict"] = verdict_json(o.verdict);
        if (!o.detail.empty()) entry["detail"] = o.detail;
        suite.push_back(std::move(entry));
    }
    j["theorem_suite"] = std::move(suite);
    return j;
}

namespace {

void render_value(const Json& value, const std::string& prefix, std::ostringstream& out) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items())
            render_value(sub, prefix.empty() ? key : prefix + "." + key, out);
    } else if (value.is_array()) {
        bool scalar = std::all_of(value.begin(), value.end(),
                                  [](const Json& v) { return !v.is_structured(); });
        if (scalar) {
            out << prefix << ":";
            for (const auto& v : value) out << ' ' << v.dump();
            out << '\n';
        } else {
            int i = 0;
            for (const auto& v : value) render_value(v, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out << prefix << ": " << value.dump() << '\n';
    }
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render_value(report, "", out);
    return out.str();
}

std::string export_dot_con(const ConLattice& lat, const SpectrumReport* spec,
                           const BooleanCenter* center) {
    auto in = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    std::ostringstream out;
    out << "digraph con {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (int i = 0; i < lat.size(); ++i) {
        out << "  c" << i << " [label=\"" << format_blocks(lat.members[i]) << "\"";
        std::vector<std::string> marks;
        if (spec) {
            if (in(spec->spec, i)) marks.push_back("spec");
            if (in(spec->min, i)) marks.push_back("min");
            if (in(spec->max, i)) marks.push_back("max");
        }
        if (center && center->contains(i)) marks.push_back("center");
        if (!marks.empty()) {
            out << ", xlabel=\"";
            for (std::size_t k = 0; k < marks.size(); ++k) out << (k ? "," : "") << marks[k];
            out << "\"";
            if (spec && in(spec->spec, i)) out << ", style=filled, fillcolor=lightgray";
            if (center && center->contains(i)) out << ", penwidth=2";
        }
        out << "];\n";
    }
    for (int i = 0; i < lat.size(); ++i)
        for (int k = 0; k < lat.size(); ++k) {
            if (i == k || !lat.leq(i, k)) continue;
            bool covers = true;
            for (int mid = 0; mid < lat.size(); ++mid)
                if (mid != i && mid != k && lat.leq(i, mid) && lat.leq(mid, k)) {
                    covers = false;
                    break;
                }
            if (covers) out << "  c" << i << " -> c" << k << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string export_dot_topology(const ConLattice& lat, const Topology& topo,
                                const std::string& title) {
    std::ostringstream out;
    out << "graph topology {\n  label=\"" << title << " (" << topo.opens.size()
        << " opens)\";\n  node [shape=ellipse, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < topo.points.size(); ++i)
        out << "  p" << i << " [label=\"" << format_blocks(lat.members[topo.points[i]])
            << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace ualg
