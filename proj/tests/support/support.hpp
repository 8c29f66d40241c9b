#pragma once

// Shared fixture loading, random generators, and brute-force reference
// implementations for the test binaries.

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/error.hpp"
#include "tpa/generic.hpp"
#include "tpa/io.hpp"
#include "tpa/modules.hpp"
#include "tpa/quiver.hpp"

namespace tpa::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline TruncatedAlgebra example3() {
    return parse_quiver(slurp(fixture_path("example3.tqa")));
}

inline MonomialModule example3_M(const TruncatedAlgebra& alg) {
    return resolve_module(
        alg, parse_module_doc(slurp(fixture_path("example3_M.mod"))));
}

// ---- random generators ---------------------------------------------------

inline int rand_int(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline TruncatedAlgebra random_algebra(std::mt19937_64& g, int max_n,
                                       int max_L, int max_arrows) {
    int n = rand_int(g, 1, max_n);
    int L = rand_int(g, 1, max_L);
    int arrows = rand_int(g, 0, max_arrows);
    QuiverData data;
    data.name = "rnd";
    for (int i = 1; i <= n; ++i) data.vertices.push_back(std::to_string(i));
    for (int k = 1; k <= arrows; ++k)
        data.arrows.push_back({"a" + std::to_string(k),
                               data.vertices[rand_int(g, 0, n - 1)],
                               data.vertices[rand_int(g, 0, n - 1)]});
    return make_algebra(validate(data), L);
}

/// Random monomial module over alg with total dimension <= max_dim
/// (retries with fewer slots/relations; falls back to a simple module).
inline MonomialModule random_module(std::mt19937_64& g, TruncatedAlgebra alg,
                                    int max_slots, long long max_dim) {
    const Quiver& q = alg.quiver;
    for (int attempt = 0; attempt < 50; ++attempt) {
        int slot_count = rand_int(g, 1, max_slots);
        std::vector<VertexId> slots;
        for (int r = 0; r < slot_count; ++r)
            slots.push_back(rand_int(g, 0, q.vertex_count() - 1));
        std::vector<SlotPath> rels;
        for (int r = 0; r < slot_count; ++r) {
            int count = rand_int(g, 0, 3);
            for (int j = 0; j < count; ++j) {
                int len = rand_int(g, 1, alg.L);
                VertexId at = slots[r];
                std::vector<int> walk;
                for (int step = 0; step < len; ++step) {
                    auto out = q.arrows_out(at);
                    if (out.empty()) break;
                    int pick = out[rand_int(g, 0, static_cast<int>(out.size()) - 1)];
                    walk.push_back(pick);
                    at = q.arrow(pick).target;
                }
                if (!walk.empty()) rels.push_back({r, make_path(q, slots[r], walk)});
            }
        }
        MonomialModule m = make_module(alg, std::move(slots), std::move(rels));
        if (radical_layering(m).dimension() <= max_dim) return m;
    }
    return simple_module(std::move(alg), 0);
}

// ---- brute-force references ----------------------------------------------

/// Longest path length from e by frontier expansion; a walk of length
/// n = #vertices forces a repeated vertex, hence a reachable cycle.
inline ExtNat brute_c(const Quiver& q, VertexId e) {
    int n = q.vertex_count();
    std::vector<char> frontier(static_cast<std::size_t>(n), 0);
    frontier[static_cast<std::size_t>(e)] = 1;
    for (int len = 1; len <= n; ++len) {
        std::vector<char> next(static_cast<std::size_t>(n), 0);
        bool any = false;
        for (VertexId v = 0; v < n; ++v)
            if (frontier[static_cast<std::size_t>(v)])
                for (int a : q.arrows_out(v)) {
                    next[static_cast<std::size_t>(q.arrow(a).target)] = 1;
                    any = true;
                }
        if (!any) return ExtNat(len - 1);
        frontier = std::move(next);
    }
    return ExtNat::infinity();
}

inline ExtNat brute_b(const Quiver& q, VertexId e) {
    int n = q.vertex_count();
    std::vector<char> frontier(static_cast<std::size_t>(n), 0);
    frontier[static_cast<std::size_t>(e)] = 1;
    for (int len = 1; len <= n; ++len) {
        std::vector<char> next(static_cast<std::size_t>(n), 0);
        bool any = false;
        for (VertexId v = 0; v < n; ++v)
            if (frontier[static_cast<std::size_t>(v)])
                for (int a : q.arrows_in(v)) {
                    next[static_cast<std::size_t>(q.arrow(a).source)] = 1;
                    any = true;
                }
        if (!any) return ExtNat(len - 1);
        frontier = std::move(next);
    }
    return ExtNat::infinity();
}

/// All paths from e of length <= max_len by recursive walking,
/// canonically sorted.
inline std::vector<Path> brute_paths(const Quiver& q, VertexId e,
                                     int max_len) {
    std::vector<Path> out;
    std::vector<int> walk;
    auto dfs = [&](auto&& self, VertexId at) -> void {
        out.push_back(make_path(q, e, walk));
        if (static_cast<int>(walk.size()) == max_len) return;
        for (int a : q.arrows_out(at)) {
            walk.push_back(a);
            self(self, q.arrow(a).target);
            walk.pop_back();
        }
    };
    dfs(dfs, e);
    std::sort(out.begin(), out.end(),
              [](const Path& a, const Path& b) { return canonical_less(a, b); });
    return out;
}

// ---- brute-force realizability --------------------------------------------

inline std::string matrix_key(const Eigen::MatrixXi& m) {
    std::ostringstream key;
    key << m.rows() << 'x' << m.cols() << ':';
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) key << m(r, c) << ',';
    return key.str();
}

/// Layerings of all prefix-closed path sets rooted at e with at most
/// cap paths (each set contains the trivial path).
inline std::vector<Eigen::MatrixXi> slot_layerings(const TruncatedAlgebra& alg,
                                                   VertexId e, int cap) {
    const Quiver& q = alg.quiver;
    std::vector<Path> nodes = enumerate_paths(q, e, alg.L);  // level order
    // parent index of each non-trivial node
    std::map<std::string, int> index;
    auto path_key = [](const Path& p) {
        std::string k;
        for (int a : p.arrows) k += std::to_string(a) + ".";
        return k;
    };
    for (std::size_t i = 0; i < nodes.size(); ++i)
        index[path_key(nodes[i])] = static_cast<int>(i);
    std::vector<int> parent(nodes.size(), -1);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        Path pref = nodes[i];
        pref.arrows.pop_back();
        pref = make_path(q, pref.source, pref.arrows);
        parent[i] = index.at(path_key(pref));
    }
    std::vector<Eigen::MatrixXi> out;
    std::vector<char> in_set(nodes.size(), 0);
    Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(alg.L + 1, q.vertex_count());
    auto dfs = [&](auto&& self, std::size_t i, int size) -> void {
        if (i == nodes.size()) {
            out.push_back(counts);
            return;
        }
        self(self, i + 1, size);  // exclude nodes[i] (and, via prefix rule,
                                  // implicitly its descendants)
        if (size == cap) return;
        if (parent[i] >= 0 && !in_set[static_cast<std::size_t>(parent[i])])
            return;
        in_set[i] = 1;
        counts(nodes[i].length(), nodes[i].target) += 1;
        self(self, i + 1, size + 1);
        counts(nodes[i].length(), nodes[i].target) -= 1;
        in_set[i] = 0;
    };
    // the trivial path is always present
    in_set[0] = 1;
    counts(0, e) += 1;
    dfs(dfs, 1, 1);
    return out;
}

/// Set of matrix keys of every achievable radical layering of total
/// dimension <= cap (multiset sums of rooted prefix-closed sets,
/// including the zero module).
inline std::set<std::string> achievable_layerings(const TruncatedAlgebra& alg,
                                                  int cap) {
    std::vector<Eigen::MatrixXi> pieces;
    for (VertexId e = 0; e < alg.quiver.vertex_count(); ++e) {
        auto part = slot_layerings(alg, e, cap);
        pieces.insert(pieces.end(), part.begin(), part.end());
    }
    Eigen::MatrixXi zero =
        Eigen::MatrixXi::Zero(alg.L + 1, alg.quiver.vertex_count());
    std::set<std::string> seen{matrix_key(zero)};
    std::vector<Eigen::MatrixXi> queue{zero};
    while (!queue.empty()) {
        Eigen::MatrixXi cur = queue.back();
        queue.pop_back();
        long long cur_dim = cur.cast<long long>().sum();
        for (const Eigen::MatrixXi& p : pieces) {
            if (cur_dim + p.cast<long long>().sum() > cap) continue;
            Eigen::MatrixXi next = cur + p;
            if (seen.insert(matrix_key(next)).second) queue.push_back(next);
        }
    }
    return seen;
}

/// Visits every (L+1) x n nonnegative matrix with entry sum <= cap.
template <class Fn>
inline void for_each_candidate(int layers, int n, int cap, Fn&& visit) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(layers, n);
    int cells = layers * n;
    auto rec = [&](auto&& self, int cell, int left) -> void {
        if (cell == cells) {
            visit(const_cast<const Eigen::MatrixXi&>(m));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            m(cell / n, cell % n) = v;
            self(self, cell + 1, left - v);
        }
        m(cell / n, cell % n) = 0;
    };
    rec(rec, 0, cap);
}

}  // namespace tpa::test
