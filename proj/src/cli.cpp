#include "tpa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/error.hpp"
#include "tpa/generic.hpp"
#include "tpa/io.hpp"
#include "tpa/modules.hpp"
#include "tpa/oracle.hpp"

namespace tpa {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    bool left_to_right = false;
    std::string quiver_override;
    std::ostream* out = nullptr;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Positional inputs sorted by extension; at most one of each kind.
struct FileSet {
    std::optional<fs::path> quiver;
    std::optional<fs::path> module;
    std::optional<fs::path> sequence;
};

FileSet classify(const std::vector<std::string>& files) {
    FileSet set;
    for (const std::string& f : files) {
        fs::path p(f);
        std::string ext = p.extension().string();
        std::optional<fs::path>* slot = nullptr;
        if (ext == ".tqa")
            slot = &set.quiver;
        else if (ext == ".mod")
            slot = &set.module;
        else if (ext == ".seq")
            slot = &set.sequence;
        else
            throw Error("unrecognized extension on '" + f +
                        "' (expected .tqa, .mod, or .seq)");
        if (*slot) throw Error("more than one " + ext + " file given");
        *slot = std::move(p);
    }
    return set;
}

template <class Fn>
auto with_file(const fs::path& path, Fn&& fn) {
    try {
        return fn(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path.string() + ":" + std::to_string(e.line) + ":" +
                    std::to_string(e.col) + ": " + e.what());
    }
}

TruncatedAlgebra load_quiver(const Options& opt, const FileSet& files,
                             const std::string& embedded_ref,
                             const fs::path& ref_base) {
    fs::path path;
    if (!opt.quiver_override.empty()) {
        path = opt.quiver_override;
    } else if (files.quiver) {
        path = *files.quiver;
    } else if (!embedded_ref.empty()) {
        path = embedded_ref;
        if (path.is_relative()) path = ref_base / path;
    } else {
        throw Error(
            "no quiver given: pass a .tqa file, --quiver, or a 'quiver' "
            "reference inside the document");
    }
    return with_file(path,
                     [](const std::string& text) { return parse_quiver(text); });
}

struct LoadedModule {
    MonomialModule mod;
    std::string name;
};

LoadedModule load_module(const Options& opt, const FileSet& files) {
    if (!files.module) throw Error("this command needs a .mod file");
    ModuleDoc doc = with_file(*files.module, [](const std::string& text) {
        return parse_module_doc(text);
    });
    TruncatedAlgebra alg =
        load_quiver(opt, files, doc.quiver_ref, files.module->parent_path());
    std::string name =
        doc.name.empty() ? files.module->stem().string() : doc.name;
    return {resolve_module(alg, doc, opt.left_to_right), std::move(name)};
}

struct LoadedSequence {
    TruncatedAlgebra alg;
    SemisimpleSequence seq;
    std::string name;
};

LoadedSequence load_sequence(const Options& opt, const FileSet& files) {
    if (!files.sequence) throw Error("this command needs a .seq file");
    SequenceDoc doc = with_file(*files.sequence, [](const std::string& text) {
        return parse_sequence_doc(text);
    });
    TruncatedAlgebra alg =
        load_quiver(opt, files, doc.quiver_ref, files.sequence->parent_path());
    SemisimpleSequence seq = resolve_sequence(alg, doc);
    std::string name =
        doc.name.empty() ? files.sequence->stem().string() : doc.name;
    return {std::move(alg), std::move(seq), std::move(name)};
}

// ---- report helpers ----------------------------------------------------

ordered_json json_extnat(ExtNat x) {
    if (x.is_finite()) return x.value();
    return "inf";
}

ordered_json json_extnat_list(const std::vector<ExtNat>& xs) {
    ordered_json a = ordered_json::array();
    for (ExtNat x : xs) a.push_back(json_extnat(x));
    return a;
}

ordered_json json_matrix(const Eigen::MatrixXi& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json report_head(const char* command, const TruncatedAlgebra& alg) {
    ordered_json j;
    j["schema"] = "tpa-report/1";
    j["command"] = command;
    j["quiver"] = alg.quiver.name();
    j["L"] = alg.L;
    return j;
}

void print_json(const Options& opt, const ordered_json& j) {
    *opt.out << j.dump(2) << "\n";
}

/// Column width of a cell; the infinity sign is three bytes but one
/// column.
std::size_t display_width(const std::string& s) {
    std::size_t w = s.size();
    for (std::size_t pos = s.find("∞"); pos != std::string::npos;
         pos = s.find("∞", pos + 1))
        w -= 2;
    return w;
}

void print_table(std::ostream& out,
                 const std::vector<std::vector<std::string>>& rows,
                 const char* indent = "  ") {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], display_width(row[c]));
        }
    for (const auto& row : rows) {
        out << indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(width[c] - display_width(row[c]) + 2, ' ');
        }
        out << "\n";
    }
}

std::string set_text(const std::vector<ExtNat>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].str();
    }
    return s + "}";
}

// ---- commands ----------------------------------------------------------

int cmd_analyze(const Options& opt, const TruncatedAlgebra& alg) {
    const Quiver& q = alg.quiver;
    FindimReport rep = findim(alg);

    std::vector<std::pair<VertexId, MonomialModule>> trees;
    ExtNat tree_max{0};
    for (VertexId i = 0; i < q.vertex_count(); ++i) {
        MonomialModule t = to_module(alg, tree_T(alg, i));
        tree_max = std::max(tree_max, pdim_module(t));
        trees.emplace_back(i, std::move(t));
    }

    if (opt.json) {
        ordered_json j = report_head("analyze", alg);
        j["vertex_count"] = q.vertex_count();
        j["arrow_count"] = q.arrow_count();
        ordered_json verts = ordered_json::array();
        for (VertexId e = 0; e < q.vertex_count(); ++e) {
            ordered_json v;
            v["name"] = q.vertex_name(e);
            v["c"] = json_extnat(c_out(q, e));
            v["b"] = json_extnat(b_in(q, e));
            v["cyclebound"] = is_cyclebound(q, e);
            verts.push_back(std::move(v));
        }
        j["vertices"] = std::move(verts);
        ordered_json cb = ordered_json::array();
        for (VertexId e : cyclebound_set(q)) cb.push_back(q.vertex_name(e));
        j["cyclebound"] = std::move(cb);
        ordered_json f;
        f["value"] = rep.findim;
        f["s"] = rep.s;
        if (rep.witness) {
            f["witness"] = {{"vertex", q.vertex_name(rep.witness->first)},
                            {"length", rep.witness->second}};
        } else {
            f["witness"] = nullptr;
        }
        f["m"] = rep.m ? ordered_json(*rep.m) : ordered_json(nullptr);
        f["bracket"] = rep.bracket_low
                           ? ordered_json({*rep.bracket_low, *rep.bracket_low + 1})
                           : ordered_json(nullptr);
        j["findim"] = std::move(f);
        ordered_json ts = ordered_json::array();
        for (const auto& [i, t] : trees) {
            ordered_json row;
            row["vertex"] = q.vertex_name(i);
            row["dimension"] = radical_layering(t).dimension();
            row["pdim"] = json_extnat(pdim_module(t));
            ts.push_back(std::move(row));
        }
        j["trees"] = std::move(ts);
        j["findim_via_trees"] = json_extnat(tree_max);
        print_json(opt, j);
        return 0;
    }

    std::ostream& out = *opt.out;
    out << "quiver " << (q.name().empty() ? "(unnamed)" : q.name()) << ": "
        << q.vertex_count() << " vertices, " << q.arrow_count()
        << " arrows, L = " << alg.L << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"vertex", "c", "b", "cyclebound"});
    for (VertexId e = 0; e < q.vertex_count(); ++e)
        rows.push_back({q.vertex_name(e), c_out(q, e).str(), b_in(q, e).str(),
                        is_cyclebound(q, e) ? "yes" : "no"});
    print_table(out, rows);
    out << "cyclebound vertices:";
    auto cb = cyclebound_set(q);
    if (cb.empty()) out << " (none)";
    for (VertexId e : cb) out << ' ' << q.vertex_name(e);
    out << "\n";
    out << "finitistic dimension: " << rep.findim;
    if (rep.witness)
        out << "  (s = " << rep.s << " attained by a path of length "
            << rep.witness->second << " ending at vertex "
            << q.vertex_name(rep.witness->first) << ")";
    out << "\n";
    if (rep.m)
        out << "longest path avoiding cyclebound vertices: m = " << *rep.m
            << ", findim bracket [" << *rep.bracket_low << ", "
            << *rep.bracket_low + 1 << "]\n";
    else
        out << "every vertex is cyclebound; no finite path bound m\n";
    out << "tree modules:\n";
    rows.clear();
    rows.push_back({"vertex", "dim", "pdim"});
    for (const auto& [i, t] : trees)
        rows.push_back({q.vertex_name(i),
                        std::to_string(radical_layering(t).dimension()),
                        pdim_module(t).str()});
    print_table(out, rows);
    out << "findim via tree modules: " << tree_max.str() << "\n";
    return 0;
}

int cmd_pdim_path(const Options& opt, const TruncatedAlgebra& alg,
                  const std::string& expr) {
    Path p = parse_path_expr(alg, expr, opt.left_to_right);
    ExtNat c = c_out(alg.quiver, p.target);
    ExtNat pd = pdim_cyclic(alg, p);
    if (opt.json) {
        ordered_json j = report_head("pdim-path", alg);
        j["path"] = format_path(alg.quiver, p);
        j["source"] = alg.quiver.vertex_name(p.source);
        j["target"] = alg.quiver.vertex_name(p.target);
        j["length"] = p.length();
        j["c_target"] = json_extnat(c);
        j["pdim"] = json_extnat(pd);
        print_json(opt, j);
        return 0;
    }
    *opt.out << "path " << format_path(alg.quiver, p) << ": "
             << alg.quiver.vertex_name(p.source) << " -> "
             << alg.quiver.vertex_name(p.target) << ", length " << p.length()
             << ", c(target) = " << c.str() << "\n"
             << "pdim = " << pd.str() << "\n";
    return 0;
}

int cmd_pdim_simple(const Options& opt, const TruncatedAlgebra& alg,
                    const std::string& vertex) {
    auto v = alg.quiver.find_vertex(vertex);
    if (!v) throw Error("unknown vertex '" + vertex + "'");
    ExtNat pd = pdim_simple(alg, *v);
    if (opt.json) {
        ordered_json j = report_head("pdim-simple", alg);
        j["vertex"] = alg.quiver.vertex_name(*v);
        j["pdim"] = json_extnat(pd);
        print_json(opt, j);
        return 0;
    }
    *opt.out << "pdim of the simple module at vertex "
             << alg.quiver.vertex_name(*v) << " = " << pd.str() << "\n";
    return 0;
}

int cmd_pdim_module(const Options& opt, const LoadedModule& lm) {
    const MonomialModule& m = lm.mod;
    ExtNat pd = pdim_module(m);
    long long dim = radical_layering(m).dimension();
    if (opt.json) {
        ordered_json j = report_head("pdim-module", m.alg);
        j["module"] = lm.name;
        ordered_json slots = ordered_json::array();
        for (VertexId e : m.slots) slots.push_back(m.alg.quiver.vertex_name(e));
        j["slots"] = std::move(slots);
        j["dimension"] = dim;
        j["pdim"] = json_extnat(pd);
        print_json(opt, j);
        return 0;
    }
    *opt.out << "module " << lm.name << ": " << m.slots.size()
             << " slot(s), dimension " << dim << "\n"
             << "pdim = " << pd.str() << "\n";
    return 0;
}

int cmd_syzygy(const Options& opt, const LoadedModule& lm, int iterate) {
    const TruncatedAlgebra& alg = lm.mod.alg;
    struct Level {
        std::vector<SlotPath> generators;
    };
    std::vector<Level> levels;
    MonomialModule current = lm.mod;
    for (int k = 1; k <= iterate; ++k) {
        std::vector<SlotPath> gens = sigma_critical(current, skeleton(current));
        levels.push_back({gens});
        if (gens.empty()) break;
        if (k == iterate) break;
        MonomialModule next = cyclic_module(alg, gens[0].path);
        for (std::size_t g = 1; g < gens.size(); ++g)
            next = direct_sum(next, cyclic_module(alg, gens[g].path));
        current = std::move(next);
    }

    if (opt.json) {
        ordered_json j = report_head("syzygy", alg);
        j["module"] = lm.name;
        ordered_json ls = ordered_json::array();
        for (std::size_t k = 0; k < levels.size(); ++k) {
            ordered_json level;
            level["level"] = k + 1;
            ordered_json gens = ordered_json::array();
            for (const SlotPath& sp : levels[k].generators) {
                ordered_json g;
                g["slot"] = sp.slot + 1;
                g["path"] = format_path(alg.quiver, sp.path);
                g["target"] = alg.quiver.vertex_name(sp.path.target);
                g["length"] = sp.path.length();
                g["pdim"] = json_extnat(pdim_cyclic(alg, sp.path));
                gens.push_back(std::move(g));
            }
            level["generators"] = std::move(gens);
            ls.push_back(std::move(level));
        }
        j["levels"] = std::move(ls);
        print_json(opt, j);
        return 0;
    }

    std::ostream& out = *opt.out;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto& gens = levels[k].generators;
        out << "syzygy " << k + 1 << ": " << gens.size() << " generator(s)";
        if (gens.empty()) out << " -- previous level is projective";
        out << "\n";
        std::vector<std::vector<std::string>> rows;
        if (!gens.empty())
            rows.push_back({"slot", "path", "target", "length", "pdim"});
        for (const SlotPath& sp : gens)
            rows.push_back({std::to_string(sp.slot + 1),
                            format_path(alg.quiver, sp.path),
                            alg.quiver.vertex_name(sp.path.target),
                            std::to_string(sp.path.length()),
                            pdim_cyclic(alg, sp.path).str()});
        print_table(out, rows);
    }
    return 0;
}

int cmd_generic(const Options& opt, const LoadedSequence& ls) {
    bool ok = realizable(ls.alg, ls.seq);
    std::optional<LayerDecomposition> dec;
    ExtNat pd;
    if (ok) {
        dec = layer_decomposition(ls.alg, ls.seq);
        pd = generic_pdim(ls.alg, ls.seq);
    }
    if (opt.json) {
        ordered_json j = report_head("generic", ls.alg);
        j["sequence"] = ls.name;
        j["dimension"] = ls.seq.dimension();
        j["realizable"] = ok;
        j["r"] = ok ? json_matrix(dec->r) : ordered_json(nullptr);
        j["generic_pdim"] = ok ? json_extnat(pd) : ordered_json(nullptr);
        print_json(opt, j);
        return 0;
    }
    std::ostream& out = *opt.out;
    out << "sequence " << ls.name << ": dimension " << ls.seq.dimension()
        << "\n";
    if (!ok) {
        out << "not realizable: no module has this radical layering\n";
        return 0;
    }
    out << "realizable\n";
    out << "r matrix (rows = layers 0.." << ls.alg.L << "):\n";
    std::vector<std::vector<std::string>> rows;
    for (int l = 0; l < dec->r.rows(); ++l) {
        std::vector<std::string> row;
        for (int i = 0; i < dec->r.cols(); ++i)
            row.push_back(std::to_string(dec->r(l, i)));
        rows.push_back(std::move(row));
    }
    print_table(out, rows);
    out << "generic pdim = " << pd.str() << "\n";
    return 0;
}

int cmd_spectrum(const Options& opt, const LoadedSequence& ls) {
    if (!realizable(ls.alg, ls.seq))
        throw Error("sequence is not realizable; it has no stratum");
    SpectrumReport rep = spectrum(ls.alg, ls.seq);
    if (opt.json) {
        ordered_json j = report_head("spectrum", ls.alg);
        j["sequence"] = ls.name;
        j["generic_pdim"] = json_extnat(rep.generic);
        j["others"] = json_extnat_list(rep.others);
        j["values"] = json_extnat_list(rep.full_set());
        print_json(opt, j);
        return 0;
    }
    *opt.out << "sequence " << ls.name << "\n"
             << "generic pdim = " << rep.generic.str() << "\n"
             << "pdim values on the stratum closure: "
             << set_text(rep.full_set()) << "\n";
    return 0;
}

int cmd_spectrum_check(const Options& opt, const LoadedSequence& ls, int cap) {
    if (!realizable(ls.alg, ls.seq))
        throw Error("sequence is not realizable; it has no stratum");
    SpectrumCheck check = spectrum_check(ls.alg, ls.seq, cap);
    if (opt.json) {
        ordered_json j = report_head("spectrum-check", ls.alg);
        j["sequence"] = ls.name;
        j["expected"] = json_extnat_list(check.expected.full_set());
        j["enumerated"] = json_extnat_list(check.enumerated);
        j["sequence_count"] = check.sequence_count;
        j["match"] = check.match;
        print_json(opt, j);
    } else {
        std::ostream& out = *opt.out;
        out << "sequence " << ls.name << "\n"
            << "formula spectrum:    " << set_text(check.expected.full_set())
            << "\n"
            << "enumerated spectrum: " << set_text(check.enumerated) << " ("
            << check.sequence_count << " realizable sequences)\n"
            << (check.match ? "MATCH\n" : "MISMATCH\n");
    }
    return check.match ? 0 : 2;
}

int cmd_oracle(const Options& opt, const LoadedModule& lm, int max_depth) {
    const TruncatedAlgebra& alg = lm.mod.alg;
    ExtNat formula = pdim_module(lm.mod);
    MatrixModule M = from_monomial(lm.mod);
    int bound = max_depth > 0 ? max_depth : default_depth_bound(alg);
    ResolutionTrace trace = pdim_upto(M, bound);
    bool match = formula.is_finite()
                     ? (trace.pdim.exact && trace.pdim.value == formula.value())
                     : !trace.pdim.exact;
    if (opt.json) {
        ordered_json j = report_head("oracle", alg);
        j["module"] = lm.name;
        j["formula_pdim"] = json_extnat(formula);
        ordered_json o;
        o["kind"] = trace.pdim.exact ? "exact" : "at_least";
        o["value"] = trace.pdim.value;
        j["oracle"] = std::move(o);
        j["depth_bound"] = bound;
        ordered_json covers = ordered_json::array();
        for (const auto& cover : trace.covers) {
            ordered_json c = ordered_json::array();
            for (VertexId e : cover) c.push_back(alg.quiver.vertex_name(e));
            covers.push_back(std::move(c));
        }
        j["covers"] = std::move(covers);
        j["match"] = match;
        print_json(opt, j);
    } else {
        std::ostream& out = *opt.out;
        out << "module " << lm.name << "\n"
            << "formula pdim = " << formula.str() << "\n"
            << "oracle pdim " << (trace.pdim.exact ? "= " : ">= ")
            << trace.pdim.value << "  (depth bound " << bound << ")\n";
        for (std::size_t k = 0; k < trace.covers.size(); ++k) {
            out << "  cover " << k << ":";
            for (VertexId e : trace.covers[k])
                out << ' ' << alg.quiver.vertex_name(e);
            out << "\n";
        }
        out << (match ? "MATCH\n" : "MISMATCH\n");
    }
    return match ? 0 : 2;
}

int cmd_graph(const Options& opt, const LoadedModule& lm) {
    std::string dot = layered_graph(lm.mod, lm.name);
    if (opt.json) {
        ordered_json j = report_head("graph", lm.mod.alg);
        j["module"] = lm.name;
        j["dot"] = dot;
        print_json(opt, j);
        return 0;
    }
    *opt.out << dot;
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    Options opt;
    opt.out = &out;

    CLI::App app{"homological invariants of truncated path algebras"};
    app.name("tpa");
    app.require_subcommand(1);
    app.set_version_flag("--version", "tpa 1.0.0");
    app.add_flag("--json", opt.json, "emit a machine readable JSON report");
    app.add_flag("--left-to-right", opt.left_to_right,
                 "read path expressions left to right instead of right to "
                 "left");
    app.add_option("--quiver", opt.quiver_override,
                   "quiver file overriding any document reference");

    auto add_files = [](CLI::App* cmd, std::vector<std::string>& files,
                        const char* desc) {
        cmd->add_option("files", files, desc);
        cmd->fallthrough();
    };

    std::vector<std::string> analyze_files;
    auto* analyze = app.add_subcommand(
        "analyze", "path bounds, cyclebound set, findim, tree modules");
    add_files(analyze, analyze_files, "input files (.tqa)");

    auto* pdim =
        app.add_subcommand("pdim", "projective dimensions of modules");
    pdim->require_subcommand(1);
    pdim->fallthrough();

    std::string path_expr;
    std::vector<std::string> pdim_path_files;
    auto* pdim_path = pdim->add_subcommand(
        "path", "pdim of the cyclic module generated by a path");
    pdim_path->add_option("expr", path_expr, "arrow labels joined by '*'")
        ->required();
    add_files(pdim_path, pdim_path_files, "input files (.tqa)");

    std::string simple_vertex;
    std::vector<std::string> pdim_simple_files;
    auto* pdim_simple_cmd =
        pdim->add_subcommand("simple", "pdim of a simple module");
    pdim_simple_cmd->add_option("vertex", simple_vertex, "vertex name")
        ->required();
    add_files(pdim_simple_cmd, pdim_simple_files, "input files (.tqa)");

    std::vector<std::string> pdim_module_files;
    auto* pdim_module_cmd =
        pdim->add_subcommand("module", "pdim of a monomial module");
    add_files(pdim_module_cmd, pdim_module_files,
              "input files (.mod and optional .tqa)");

    std::vector<std::string> syzygy_files;
    int iterate = 1;
    auto* syzygy_cmd = app.add_subcommand(
        "syzygy", "syzygy generators of a monomial module");
    syzygy_cmd->add_option("--iterate", iterate, "number of syzygy levels")
        ->check(CLI::PositiveNumber);
    add_files(syzygy_cmd, syzygy_files, "input files (.mod and optional .tqa)");

    std::vector<std::string> generic_files;
    auto* generic_cmd = app.add_subcommand(
        "generic",
        "realizability and generic pdim of a semisimple sequence");
    add_files(generic_cmd, generic_files,
              "input files (.seq and optional .tqa)");

    std::vector<std::string> spectrum_files;
    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "pdim values on the closure of a sequence's stratum");
    add_files(spectrum_cmd, spectrum_files,
              "input files (.seq and optional .tqa)");

    std::vector<std::string> spectrum_check_files;
    int cap = 12;
    auto* spectrum_check_cmd = app.add_subcommand(
        "spectrum-check",
        "verify the spectrum against enumeration of larger sequences");
    spectrum_check_cmd->add_option(
        "--cap", cap, "largest sequence dimension the enumeration accepts");
    add_files(spectrum_check_cmd, spectrum_check_files,
              "input files (.seq and optional .tqa)");

    std::vector<std::string> oracle_files;
    int max_depth = 0;
    auto* oracle_cmd = app.add_subcommand(
        "oracle",
        "verify a module's pdim with the exact-arithmetic resolution oracle");
    oracle_cmd->add_option("--max-depth", max_depth,
                           "resolution depth bound (default 2n(L+1))");
    add_files(oracle_cmd, oracle_files,
              "input files (.mod and optional .tqa)");

    std::vector<std::string> graph_files;
    bool dot = false;
    auto* graph_cmd = app.add_subcommand(
        "graph", "layered graph of a monomial module as DOT");
    graph_cmd->add_flag("--dot", dot, "emit Graphviz DOT (the only format)");
    add_files(graph_cmd, graph_files, "input files (.mod and optional .tqa)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) {
            FileSet files = classify(analyze_files);
            return cmd_analyze(opt, load_quiver(opt, files, "", "."));
        }
        if (*pdim_path) {
            FileSet files = classify(pdim_path_files);
            return cmd_pdim_path(opt, load_quiver(opt, files, "", "."),
                                 path_expr);
        }
        if (*pdim_simple_cmd) {
            FileSet files = classify(pdim_simple_files);
            return cmd_pdim_simple(opt, load_quiver(opt, files, "", "."),
                                   simple_vertex);
        }
        if (*pdim_module_cmd)
            return cmd_pdim_module(opt, load_module(opt, classify(pdim_module_files)));
        if (*syzygy_cmd)
            return cmd_syzygy(opt, load_module(opt, classify(syzygy_files)),
                              iterate);
        if (*generic_cmd)
            return cmd_generic(opt, load_sequence(opt, classify(generic_files)));
        if (*spectrum_cmd)
            return cmd_spectrum(opt,
                                load_sequence(opt, classify(spectrum_files)));
        if (*spectrum_check_cmd)
            return cmd_spectrum_check(
                opt, load_sequence(opt, classify(spectrum_check_files)), cap);
        if (*oracle_cmd)
            return cmd_oracle(opt, load_module(opt, classify(oracle_files)),
                              max_depth);
        if (*graph_cmd)
            return cmd_graph(opt, load_module(opt, classify(graph_files)));
        throw Error("no command given");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tpa
