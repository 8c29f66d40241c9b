#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

/// Path in a projective module P = ⊕_r Λz_r: a quiver path starting at
/// the vertex of slot r.
struct SlotPath {
    int slot = 0;
    Path path;

    friend bool operator==(const SlotPath&, const SlotPath&) = default;
};

/// Canonical order: by slot, then canonical path order.
bool canonical_less(const SlotPath& a, const SlotPath& b);

/// Monomially presented module M = P/C with P = ⊕_r Λz_r and C
/// generated by paths. The presentation is kept reduced: relations are
/// pairwise incomparable in the initial-subpath order, have lengths in
/// 1..L, and are stored in canonical order. The empty slot list is the
/// zero module.
struct MonomialModule {
    TruncatedAlgebra alg;
    std::vector<VertexId> slots;
    std::vector<SlotPath> relations;
};

/// Validates slot indices, relation sources, composability and lengths;
/// reduces the presentation (drops relations extending other
/// relations, deduplicates). Throws Error on invalid input.
MonomialModule make_module(TruncatedAlgebra alg, std::vector<VertexId> slots,
                           std::vector<SlotPath> relations);

/// Slots and relations of both, concatenated (b's slots shifted).
MonomialModule direct_sum(const MonomialModule& a, const MonomialModule& b);

/// S_i = Λe_i/Je_i: one slot, relations = arrows out of e_i.
MonomialModule simple_module(TruncatedAlgebra alg, VertexId i);

/// Λe_i: one slot, no relations.
MonomialModule projective_module(TruncatedAlgebra alg, VertexId i);

/// The cyclic left ideal Λq as a module with one slot at target(q);
/// relations are the minimal paths annihilating q (length L - len(q) + 1).
MonomialModule cyclic_module(TruncatedAlgebra alg, const Path& q);

/// Tree module Λe/V: determined by its root and branches (the maximal
/// surviving paths). Branches are pairwise incomparable; if any branch
/// has positive length there is no length-0 branch.
struct TreeModule {
    VertexId root = -1;
    std::vector<Path> branches;
};

/// Validates the branch set (source, lengths, incomparability). Throws
/// Error on invalid input.
TreeModule make_tree(const TruncatedAlgebra& alg, VertexId root,
                     std::vector<Path> branches);

/// The tree module as a single-slot MonomialModule.
MonomialModule to_module(const TruncatedAlgebra& alg, const TreeModule& t);

/// Skeleton: prefix-closed set of slot paths whose length-l members
/// induce a basis of J^l M / J^{l+1} M. Stored in canonical order;
/// cardinality = dim M.
struct Skeleton {
    std::vector<SlotPath> paths;

    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Radical layering 𝕊(M): counts(l, i) = multiplicity of S_i in
/// J^l M / J^{l+1} M, rows l = 0..L.
struct SemisimpleSequence {
    Eigen::MatrixXi counts;

    int layers() const { return static_cast<int>(counts.rows()); }
    int vertices() const { return static_cast<int>(counts.cols()); }
    long long dimension() const { return counts.cast<long long>().sum(); }

    friend bool operator==(const SemisimpleSequence& a,
                           const SemisimpleSequence& b) {
        return a.counts.rows() == b.counts.rows() &&
               a.counts.cols() == b.counts.cols() && a.counts == b.counts;
    }
};

/// The canonical skeleton of a reduced monomial presentation: all slot
/// paths of length <= L containing no relation as an initial subpath.
Skeleton skeleton(const MonomialModule& m);

/// σ-critical paths: arrow extensions (within length L) of σ members
/// that fall outside σ; canonical order.
std::vector<SlotPath> sigma_critical(const MonomialModule& m,
                                     const Skeleton& sigma);

/// Generators of Ω¹(M) = ⊕ Λq over σ-critical q, for the canonical
/// skeleton; the underlying quiver paths in canonical slot order.
std::vector<Path> syzygy(const MonomialModule& m);

/// 0 if the syzygy is empty, else 1 + max pdim Λq over its generators.
ExtNat pdim_module(const MonomialModule& m);

/// counts(l, i) = number of canonical-skeleton paths of length l
/// ending at e_i.
SemisimpleSequence radical_layering(const MonomialModule& m);

/// Per-slot tree modules with the same skeleton as m (branches = the
/// maximal paths of the slot's skeleton part).
std::vector<TreeModule> treeify(const MonomialModule& m);

/// Layered graph of the skeleton: one node per skeleton or σ-critical
/// path, labeled by its terminal vertex, ranked by length; edges
/// labeled by arrows, dashed into critical nodes.
struct GraphDoc {
    struct Node {
        SlotPath path;
        bool critical = false;
    };
    struct Edge {
        int parent = -1;  // index into nodes
        int child = -1;
        int arrow = -1;
    };

    std::vector<Node> nodes;  // canonical order
    std::vector<Edge> edges;
};

GraphDoc graph_doc(const MonomialModule& m);

/// DOT rendering of graph_doc (one rank per path length, dashed edges
/// into σ-critical nodes).
std::string layered_graph(const MonomialModule& m, std::string_view title);

}  // namespace tpa
