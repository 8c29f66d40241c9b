#include "tpa/modules.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tpa {

namespace {

using ArrowSeq = std::vector<int>;

// Relation lookup sets, one per slot.
std::vector<std::set<ArrowSeq>> relation_sets(const MonomialModule& m) {
    std::vector<std::set<ArrowSeq>> sets(m.slots.size());
    for (const SlotPath& r : m.relations)
        sets[r.slot].insert(r.path.arrows);
    return sets;
}

}  // namespace

bool canonical_less(const SlotPath& a, const SlotPath& b) {
    if (a.slot != b.slot)
        return a.slot < b.slot;
    return canonical_less(a.path, b.path);
}

MonomialModule make_module(TruncatedAlgebra alg, std::vector<VertexId> slots,
                           std::vector<SlotPath> relations) {
    const Quiver& q = alg.quiver;
    for (VertexId v : slots)
        if (v < 0 || v >= q.vertex_count())
            throw Error("slot vertex out of range");
    for (SlotPath& r : relations) {
        if (r.slot < 0 || r.slot >= static_cast<int>(slots.size()))
            throw Error("relation slot out of range");
        if (r.path.length() < 1 || r.path.length() > alg.L)
            throw Error("relation length must be in 1..L");
        // Re-derive the path to check composability and the target.
        r.path = make_path(q, r.path.source, r.path.arrows);
        if (r.path.source != slots[r.slot])
            throw Error("relation does not start at its slot vertex");
    }

    std::sort(relations.begin(), relations.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    std::vector<SlotPath> reduced;
    for (const SlotPath& r : relations) {
        bool redundant = false;
        for (const SlotPath& kept : reduced)
            if (kept.slot == r.slot && is_initial_subpath(kept.path, r.path)) {
                redundant = true;
                break;
            }
        if (!redundant)
            reduced.push_back(r);
    }
    return MonomialModule{std::move(alg), std::move(slots), std::move(reduced)};
}

MonomialModule direct_sum(const MonomialModule& a, const MonomialModule& b) {
    MonomialModule sum = a;
    int shift = static_cast<int>(a.slots.size());
    sum.slots.insert(sum.slots.end(), b.slots.begin(), b.slots.end());
    for (SlotPath r : b.relations) {
        r.slot += shift;
        sum.relations.push_back(std::move(r));
    }
    std::sort(sum.relations.begin(), sum.relations.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    return sum;
}

MonomialModule simple_module(TruncatedAlgebra alg, VertexId i) {
    std::vector<SlotPath> relations;
    for (int id : alg.quiver.arrows_out(i))
        relations.push_back({0, make_path(alg.quiver, i, {id})});
    return make_module(std::move(alg), {i}, std::move(relations));
}

MonomialModule projective_module(TruncatedAlgebra alg, VertexId i) {
    return make_module(std::move(alg), {i}, {});
}

MonomialModule cyclic_module(TruncatedAlgebra alg, const Path& q) {
    CyclicSyzygy cyc = branches_and_syzygy_of_cyclic(alg, q);
    std::vector<SlotPath> relations;
    for (const Path& g : cyc.generators)
        relations.push_back({0, g});
    return make_module(std::move(alg), {q.target}, std::move(relations));
}

TreeModule make_tree(const TruncatedAlgebra& alg, VertexId root,
                     std::vector<Path> branches) {
    for (Path& b : branches) {
        b = make_path(alg.quiver, b.source, b.arrows);
        if (b.source != root)
            throw Error("branch does not start at the root");
        if (b.length() > alg.L)
            throw Error("branch length exceeds L");
    }
    std::sort(branches.begin(), branches.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    for (size_t i = 0; i < branches.size(); ++i)
        for (size_t j = i + 1; j < branches.size(); ++j)
            if (is_initial_subpath(branches[i], branches[j]) ||
                is_initial_subpath(branches[j], branches[i]))
                throw Error("branches must be pairwise incomparable");
    return TreeModule{root, std::move(branches)};
}

MonomialModule to_module(const TruncatedAlgebra& alg, const TreeModule& t) {
    std::set<ArrowSeq> sigma;
    std::vector<Path> members;
    for (const Path& b : t.branches)
        for (int len = 0; len <= b.length(); ++len) {
            ArrowSeq prefix(b.arrows.begin(), b.arrows.begin() + len);
            if (sigma.insert(prefix).second)
                members.push_back(make_path(alg.quiver, t.root, std::move(prefix)));
        }

    std::vector<SlotPath> relations;
    for (const Path& p : members) {
        if (p.length() >= alg.L)
            continue;
        for (int id : alg.quiver.arrows_out(p.target)) {
            Path ext = extend(alg.quiver, p, id);
            if (!sigma.count(ext.arrows))
                relations.push_back({0, std::move(ext)});
        }
    }
    return make_module(alg, {t.root}, std::move(relations));
}

Skeleton skeleton(const MonomialModule& m) {
    const Quiver& q = m.alg.quiver;
    std::vector<std::set<ArrowSeq>> rels = relation_sets(m);
    Skeleton sigma;
    for (int r = 0; r < static_cast<int>(m.slots.size()); ++r) {
        std::vector<Path> level{trivial_path(m.slots[r])};
        sigma.paths.push_back({r, level.front()});
        for (int len = 0; len < m.alg.L && !level.empty(); ++len) {
            std::vector<Path> next;
            for (const Path& p : level)
                for (int id : q.arrows_out(p.target)) {
                    Path ext = extend(q, p, id);
                    // A reduced relation can only be met head-on: every
                    // proper initial subpath of ext already survived.
                    if (rels[r].count(ext.arrows))
                        continue;
                    sigma.paths.push_back({r, ext});
                    next.push_back(std::move(ext));
                }
            level = std::move(next);
        }
    }
    std::sort(sigma.paths.begin(), sigma.paths.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    return sigma;
}

std::vector<SlotPath> sigma_critical(const MonomialModule& m,
                                     const Skeleton& sigma) {
    const Quiver& q = m.alg.quiver;
    std::vector<std::set<ArrowSeq>> member(m.slots.size());
    for (const SlotPath& sp : sigma.paths)
        member[sp.slot].insert(sp.path.arrows);

    std::vector<SlotPath> critical;
    for (const SlotPath& sp : sigma.paths) {
        if (sp.path.length() >= m.alg.L)
            continue;
        for (int id : q.arrows_out(sp.path.target)) {
            Path ext = extend(q, sp.path, id);
            if (!member[sp.slot].count(ext.arrows))
                critical.push_back({sp.slot, std::move(ext)});
        }
    }
    std::sort(critical.begin(), critical.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    return critical;
}

std::vector<Path> syzygy(const MonomialModule& m) {
    std::vector<Path> generators;
    for (const SlotPath& sp : sigma_critical(m, skeleton(m)))
        generators.push_back(sp.path);
    return generators;
}

ExtNat pdim_module(const MonomialModule& m) {
    std::vector<Path> generators = syzygy(m);
    if (generators.empty())
        return ExtNat(0);
    ExtNat best(0);
    for (const Path& g : generators)
        best = std::max(best, pdim_cyclic(m.alg, g));
    return ExtNat(1) + best;
}

SemisimpleSequence radical_layering(const MonomialModule& m) {
    SemisimpleSequence s;
    s.counts = Eigen::MatrixXi::Zero(m.alg.L + 1, m.alg.quiver.vertex_count());
    for (const SlotPath& sp : skeleton(m).paths)
        s.counts(sp.path.length(), sp.path.target) += 1;
    return s;
}

std::vector<TreeModule> treeify(const MonomialModule& m) {
    Skeleton sigma = skeleton(m);
    std::vector<std::set<ArrowSeq>> member(m.slots.size());
    for (const SlotPath& sp : sigma.paths)
        member[sp.slot].insert(sp.path.arrows);

    std::vector<TreeModule> trees(m.slots.size());
    for (int r = 0; r < static_cast<int>(m.slots.size()); ++r)
        trees[r].root = m.slots[r];
    for (const SlotPath& sp : sigma.paths) {
        bool maximal = true;
        if (sp.path.length() < m.alg.L)
            for (int id : m.alg.quiver.arrows_out(sp.path.target)) {
                ArrowSeq ext = sp.path.arrows;
                ext.push_back(id);
                if (member[sp.slot].count(ext)) {
                    maximal = false;
                    break;
                }
            }
        if (maximal)
            trees[sp.slot].branches.push_back(sp.path);
    }
    return trees;
}

GraphDoc graph_doc(const MonomialModule& m) {
    Skeleton sigma = skeleton(m);
    std::vector<SlotPath> critical = sigma_critical(m, sigma);

    GraphDoc doc;
    for (const SlotPath& sp : sigma.paths)
        doc.nodes.push_back({sp, false});
    for (const SlotPath& sp : critical)
        doc.nodes.push_back({sp, true});
    std::sort(doc.nodes.begin(), doc.nodes.end(),
              [](const GraphDoc::Node& a, const GraphDoc::Node& b) {
                  if (!(a.path == b.path))
                      return canonical_less(a.path, b.path);
                  return a.critical < b.critical;
              });

    std::map<std::pair<int, ArrowSeq>, int> index;
    for (int i = 0; i < static_cast<int>(doc.nodes.size()); ++i)
        index[{doc.nodes[i].path.slot, doc.nodes[i].path.path.arrows}] = i;
    for (int i = 0; i < static_cast<int>(doc.nodes.size()); ++i) {
        const SlotPath& sp = doc.nodes[i].path;
        if (sp.path.length() == 0)
            continue;
        ArrowSeq parent(sp.path.arrows.begin(), sp.path.arrows.end() - 1);
        doc.edges.push_back(
                {index.at({sp.slot, parent}), i, sp.path.arrows.back()});
    }
    return doc;
}

namespace {

std::string dot_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string node_id(const Quiver& q, const SlotPath& sp) {
    std::string id = "s" + std::to_string(sp.slot);
    for (size_t i = 0; i < sp.path.arrows.size(); ++i) {
        id += i == 0 ? ":" : ",";
        id += q.arrow(sp.path.arrows[i]).label;
    }
    return id;
}

}  // namespace

std::string layered_graph(const MonomialModule& m, std::string_view title) {
    const Quiver& q = m.alg.quiver;
    GraphDoc doc = graph_doc(m);

    std::string dot = "digraph \"" + dot_escape(title) + "\" {\n";
    dot += "  rankdir=TB;\n";
    dot += "  node [shape=circle, fontsize=11, margin=0.02];\n";
    for (const GraphDoc::Node& node : doc.nodes) {
        dot += "  \"" + dot_escape(node_id(q, node.path)) + "\" [label=\"" +
               dot_escape(q.vertex_name(node.path.path.target)) + "\"";
        if (node.critical)
            dot += ", style=dashed";
        dot += "];\n";
    }
    for (int len = 0; len <= m.alg.L; ++len) {
        std::string rank;
        for (const GraphDoc::Node& node : doc.nodes)
            if (node.path.path.length() == len)
                rank += " \"" + dot_escape(node_id(q, node.path)) + "\";";
        if (!rank.empty())
            dot += "  { rank=same;" + rank + " }\n";
    }
    for (const GraphDoc::Edge& e : doc.edges) {
        dot += "  \"" + dot_escape(node_id(q, doc.nodes[e.parent].path)) +
               "\" -> \"" + dot_escape(node_id(q, doc.nodes[e.child].path)) +
               "\" [label=\"" + dot_escape(q.arrow(e.arrow).label) + "\"";
        if (doc.nodes[e.child].critical)
            dot += ", style=dashed";
        dot += "];\n";
    }
    dot += "}\n";
    return dot;
}

}  // namespace tpa
