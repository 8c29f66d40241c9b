#include "tpa/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tpa/error.hpp"

namespace tpa {
namespace {

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

bool word_char(char c) {
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
    return c == '_' || c == '.' || c == '/' || c == '*' || c == '-';
}

/// Splits one line into words and the punctuation tokens ":", "=", "->".
/// "-" is punctuation only when followed by ">", so names and paths may
/// contain dashes. "#" starts a comment.
std::vector<Token> lex_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (c == ':' || c == '=') {
            out.push_back({std::string(1, c), line_no, col});
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", line_no, col});
            i += 2;
            continue;
        }
        if (!word_char(c))
            throw ParseError("unexpected character '" + std::string(1, c) + "'",
                             line_no, col);
        std::size_t j = i;
        while (j < line.size() && word_char(line[j])) {
            if (line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>')
                break;
            ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), line_no, col});
        i = j;
    }
    return out;
}

std::vector<std::vector<Token>> lex(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        auto tokens = lex_line(line, line_no);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

long long parse_int(const Token& t) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(t.text, &used);
        if (used == t.text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("expected an integer, got '" + t.text + "'", t.line,
                     t.col);
}

bool looks_like_int(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

void expect_count(const std::vector<Token>& ts, std::size_t n,
                  const char* what) {
    if (ts.size() == n) return;
    const Token& at = ts.size() > n ? ts[n] : ts.back();
    throw ParseError(std::string("malformed ") + what + " line", at.line,
                     at.col);
}

std::vector<std::string> split_expr(std::string_view expr) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t star = expr.find('*', pos);
        std::string_view piece = expr.substr(
            pos, star == std::string_view::npos ? expr.size() - pos
                                                : star - pos);
        parts.emplace_back(piece);
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return parts;
}

}  // namespace

TruncatedAlgebra parse_quiver(std::string_view text) {
    QuiverData data;
    bool have_l = false;
    long long l_value = 0;
    for (const auto& ts : lex(text)) {
        const Token& head = ts[0];
        if (head.text == "quiver") {
            expect_count(ts, 2, "quiver");
            data.name = ts[1].text;
        } else if (head.text == "L") {
            if (ts.size() == 3 && ts[1].text == "=") {
                l_value = parse_int(ts[2]);
            } else if (ts.size() == 2) {
                l_value = parse_int(ts[1]);
            } else {
                throw ParseError("malformed L line", head.line, head.col);
            }
            have_l = true;
        } else if (head.text == "vertices") {
            if (ts.size() < 2)
                throw ParseError("vertices line needs at least one name",
                                 head.line, head.col);
            for (std::size_t i = 1; i < ts.size(); ++i)
                data.vertices.push_back(ts[i].text);
        } else {
            // label: src -> tgt
            if (ts.size() != 5 || ts[1].text != ":" || ts[3].text != "->")
                throw ParseError("expected 'label: source -> target'",
                                 head.line, head.col);
            data.arrows.push_back({head.text, ts[2].text, ts[4].text});
        }
    }
    if (!have_l) throw Error("quiver document is missing an L line");
    if (data.vertices.empty())
        throw Error("quiver document declares no vertices");
    Quiver q = validate(data);
    return make_algebra(std::move(q), static_cast<int>(l_value));
}

std::string emit_quiver(const TruncatedAlgebra& alg) {
    const Quiver& q = alg.quiver;
    std::ostringstream out;
    if (!q.name().empty()) out << "quiver " << q.name() << "\n";
    out << "L = " << alg.L << "\n";
    out << "vertices";
    for (VertexId e = 0; e < q.vertex_count(); ++e)
        out << ' ' << q.vertex_name(e);
    out << "\n";
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        out << ar.label << ": " << q.vertex_name(ar.source) << " -> "
            << q.vertex_name(ar.target) << "\n";
    }
    return out.str();
}

ModuleDoc parse_module_doc(std::string_view text) {
    ModuleDoc doc;
    for (const auto& ts : lex(text)) {
        const Token& head = ts[0];
        if (head.text == "module") {
            expect_count(ts, 2, "module");
            doc.name = ts[1].text;
        } else if (head.text == "quiver") {
            expect_count(ts, 2, "quiver");
            doc.quiver_ref = ts[1].text;
        } else if (head.text == "slots") {
            if (ts.size() < 2)
                throw ParseError("slots line needs at least one vertex",
                                 head.line, head.col);
            for (std::size_t i = 1; i < ts.size(); ++i)
                doc.slot_vertices.push_back(ts[i].text);
        } else if (head.text == "rel") {
            if (ts.size() != 4 || ts[2].text != ":")
                throw ParseError("expected 'rel <slot>: <path>'", head.line,
                                 head.col);
            long long slot = parse_int(ts[1]);
            doc.relations.push_back({static_cast<int>(slot), ts[3].text,
                                     ts[3].line, ts[3].col});
        } else {
            throw ParseError("unknown directive '" + head.text + "'",
                             head.line, head.col);
        }
    }
    if (doc.slot_vertices.empty())
        throw Error("module document declares no slots");
    return doc;
}

MonomialModule resolve_module(const TruncatedAlgebra& alg,
                              const ModuleDoc& doc, bool left_to_right) {
    std::vector<VertexId> slots;
    slots.reserve(doc.slot_vertices.size());
    for (const std::string& name : doc.slot_vertices) {
        auto v = alg.quiver.find_vertex(name);
        if (!v) throw Error("unknown vertex '" + name + "' in slots");
        slots.push_back(*v);
    }
    std::vector<SlotPath> relations;
    relations.reserve(doc.relations.size());
    for (const ModuleDoc::Relation& rel : doc.relations) {
        if (rel.slot < 1 || rel.slot > static_cast<int>(slots.size()))
            throw ParseError("relation slot " + std::to_string(rel.slot) +
                                 " out of range",
                             rel.line, rel.col);
        Path p = parse_path_expr(alg, rel.expr, left_to_right);
        if (p.source != slots[rel.slot - 1])
            throw Error("relation '" + rel.expr + "' does not start at slot " +
                        std::to_string(rel.slot) + " vertex '" +
                        alg.quiver.vertex_name(slots[rel.slot - 1]) + "'");
        relations.push_back({rel.slot - 1, std::move(p)});
    }
    return make_module(alg, std::move(slots), std::move(relations));
}

std::string emit_module(const MonomialModule& m, std::string_view name,
                        std::string_view quiver_ref) {
    std::ostringstream out;
    if (!name.empty()) out << "module " << name << "\n";
    if (!quiver_ref.empty()) out << "quiver " << quiver_ref << "\n";
    out << "slots";
    for (VertexId e : m.slots) out << ' ' << m.alg.quiver.vertex_name(e);
    out << "\n";
    for (const SlotPath& rel : m.relations)
        out << "rel " << rel.slot + 1 << ": "
            << format_path(m.alg.quiver, rel.path) << "\n";
    return out.str();
}

SequenceDoc parse_sequence_doc(std::string_view text) {
    SequenceDoc doc;
    for (const auto& ts : lex(text)) {
        const Token& head = ts[0];
        if (head.text == "sequence") {
            expect_count(ts, 2, "sequence");
            doc.name = ts[1].text;
        } else if (head.text == "quiver") {
            expect_count(ts, 2, "quiver");
            doc.quiver_ref = ts[1].text;
        } else if (looks_like_int(head.text)) {
            std::vector<long long> row;
            row.reserve(ts.size());
            for (const Token& t : ts) row.push_back(parse_int(t));
            if (doc.rows.empty()) doc.first_row_line = head.line;
            doc.rows.push_back(std::move(row));
        } else {
            throw ParseError("unknown directive '" + head.text + "'",
                             head.line, head.col);
        }
    }
    if (doc.rows.empty()) throw Error("sequence document has no rows");
    return doc;
}

SemisimpleSequence resolve_sequence(const TruncatedAlgebra& alg,
                                    const SequenceDoc& doc) {
    const int layers = alg.L + 1;
    const int n = alg.quiver.vertex_count();
    if (static_cast<int>(doc.rows.size()) != layers)
        throw Error("sequence has " + std::to_string(doc.rows.size()) +
                    " rows, expected " + std::to_string(layers) +
                    " (Loewy length of the algebra)");
    SemisimpleSequence S;
    S.counts.setZero(layers, n);
    for (int l = 0; l < layers; ++l) {
        const auto& row = doc.rows[l];
        if (static_cast<int>(row.size()) != n)
            throw Error("sequence row " + std::to_string(l + 1) + " has " +
                        std::to_string(row.size()) + " entries, expected " +
                        std::to_string(n));
        for (int i = 0; i < n; ++i) {
            if (row[i] < 0)
                throw Error("sequence entries must be nonnegative");
            S.counts(l, i) = static_cast<int>(row[i]);
        }
    }
    return S;
}

std::string emit_sequence(const TruncatedAlgebra& alg,
                          const SemisimpleSequence& S, std::string_view name,
                          std::string_view quiver_ref) {
    (void)alg;
    std::ostringstream out;
    if (!name.empty()) out << "sequence " << name << "\n";
    if (!quiver_ref.empty()) out << "quiver " << quiver_ref << "\n";
    for (int l = 0; l < S.layers(); ++l) {
        for (int i = 0; i < S.vertices(); ++i) {
            if (i) out << ' ';
            out << S.counts(l, i);
        }
        out << "\n";
    }
    return out.str();
}

Path parse_path_expr(const TruncatedAlgebra& alg, std::string_view expr,
                     bool left_to_right) {
    std::vector<std::string> parts = split_expr(expr);
    for (const std::string& p : parts)
        if (p.empty())
            throw Error("empty factor in path expression '" +
                        std::string(expr) + "'");
    if (parts.size() == 1) {
        if (auto v = alg.quiver.find_vertex(parts[0]);
            v && !alg.quiver.find_arrow(parts[0]))
            return trivial_path(*v);
    }
    // Written composition order is right to left: the rightmost factor
    // is traversed first.
    if (!left_to_right) std::reverse(parts.begin(), parts.end());
    std::vector<int> walk;
    walk.reserve(parts.size());
    for (const std::string& label : parts) {
        auto a = alg.quiver.find_arrow(label);
        if (!a)
            throw Error("unknown arrow label '" + label +
                        "' in path expression '" + std::string(expr) + "'");
        walk.push_back(*a);
    }
    Path p = make_path(alg.quiver, alg.quiver.arrow(walk[0]).source, walk);
    if (p.length() > alg.L)
        throw Error("path '" + std::string(expr) + "' has length " +
                    std::to_string(p.length()) + ", which exceeds L = " +
                    std::to_string(alg.L));
    return p;
}

}  // namespace tpa
