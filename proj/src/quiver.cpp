#include "tpa/quiver.hpp"

#include <algorithm>
#include <cassert>

namespace tpa {

namespace {

// Vertices lying on an oriented cycle: members of a nontrivial SCC, or
// carrying a loop. Iterative Tarjan, robust against deep quivers.
std::vector<char> on_cycle_set(const std::vector<std::vector<int>>& out,
                               const std::vector<Arrow>& arrows) {
    const int n = static_cast<int>(out.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<int> comp_size;
    int next_index = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < out[f.v].size()) {
                int w = arrows[out[f.v][f.edge++]].target;
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int id = static_cast<int>(comp_size.size());
                    int size = 0;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = id;
                        ++size;
                    } while (w != f.v);
                    comp_size.push_back(size);
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    std::vector<char> cyclic(n, 0);
    for (int v = 0; v < n; ++v)
        if (comp_size[comp[v]] > 1)
            cyclic[v] = 1;
    for (const Arrow& a : arrows)
        if (a.source == a.target)
            cyclic[a.source] = 1;
    return cyclic;
}

// Closure of `seed` under the given adjacency (BFS).
std::vector<char> closure(const std::vector<char>& seed,
                          const std::vector<std::vector<int>>& adjacent) {
    std::vector<char> seen = seed;
    std::vector<int> queue;
    for (int v = 0; v < static_cast<int>(seed.size()); ++v)
        if (seed[v])
            queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adjacent[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return seen;
}

// Longest-path DP on the subgraph avoiding `infinite` vertices; that
// subgraph is acyclic, so memoized DFS terminates.
std::vector<ExtNat> longest_paths(const std::vector<char>& infinite,
                                  const std::vector<std::vector<int>>& step) {
    const int n = static_cast<int>(infinite.size());
    std::vector<long long> memo(n, -1);
    std::vector<ExtNat> result(n);

    struct Frame {
        int v;
        size_t edge;
        long long best;
    };
    for (int root = 0; root < n; ++root) {
        if (infinite[root]) {
            result[root] = ExtNat::infinity();
            continue;
        }
        if (memo[root] >= 0)
            continue;
        std::vector<Frame> frames{{root, 0, 0}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < step[f.v].size()) {
                int w = step[f.v][f.edge++];
                assert(!infinite[w]);
                if (memo[w] >= 0)
                    f.best = std::max(f.best, memo[w] + 1);
                else
                    frames.push_back({w, 0, 0});
            } else {
                memo[f.v] = f.best;
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    Frame& g = frames.back();
                    g.best = std::max(g.best, memo[v] + 1);
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!infinite[v])
            result[v] = ExtNat(memo[v]);
    return result;
}

}  // namespace

Quiver validate(QuiverData data) {
    if (data.vertices.empty())
        throw Error("quiver has an empty vertex set");

    Quiver q;
    q.name_ = std::move(data.name);
    q.vertex_names_ = std::move(data.vertices);
    const int n = static_cast<int>(q.vertex_names_.size());
    for (int v = 0; v < n; ++v) {
        if (q.vertex_names_[v].empty())
            throw Error("empty vertex name");
        if (!q.vertex_by_name_.emplace(q.vertex_names_[v], v).second)
            throw Error("duplicate vertex name '" + q.vertex_names_[v] + "'");
    }

    q.out_.resize(n);
    q.in_.resize(n);
    q.count_ = Eigen::MatrixXi::Zero(n, n);
    for (const QuiverData::ArrowData& a : data.arrows) {
        auto src = q.vertex_by_name_.find(a.source);
        auto tgt = q.vertex_by_name_.find(a.target);
        if (src == q.vertex_by_name_.end())
            throw Error("dangling endpoint: arrow '" + a.label +
                        "' has unknown source '" + a.source + "'");
        if (tgt == q.vertex_by_name_.end())
            throw Error("dangling endpoint: arrow '" + a.label +
                        "' has unknown target '" + a.target + "'");
        if (a.label.empty())
            throw Error("empty arrow label");
        int id = static_cast<int>(q.arrows_.size());
        if (!q.arrow_by_label_.emplace(a.label, id).second)
            throw Error("duplicate arrow label '" + a.label + "'");
        q.arrows_.push_back({id, a.label, src->second, tgt->second});
        q.out_[src->second].push_back(id);
        q.in_[tgt->second].push_back(id);
        q.count_(tgt->second, src->second) += 1;
    }

    std::vector<char> cyclic = on_cycle_set(q.out_, q.arrows_);
    std::vector<std::vector<int>> succ(n), pred(n);
    for (const Arrow& a : q.arrows_) {
        succ[a.source].push_back(a.target);
        pred[a.target].push_back(a.source);
    }
    q.cyclebound_ = closure(cyclic, pred);
    q.from_cycle_ = closure(cyclic, succ);
    q.c_ = longest_paths(q.cyclebound_, succ);
    q.b_ = longest_paths(q.from_cycle_, pred);
    return q;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
    auto it = vertex_by_name_.find(std::string(name));
    if (it == vertex_by_name_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(std::string_view label) const {
    auto it = arrow_by_label_.find(std::string(label));
    if (it == arrow_by_label_.end())
        return std::nullopt;
    return it->second;
}

bool is_cyclebound(const Quiver& q, VertexId e) {
    return q.cyclebound_[e] != 0;
}

bool reachable_from_cycle(const Quiver& q, VertexId e) {
    return q.from_cycle_[e] != 0;
}

std::vector<VertexId> cyclebound_set(const Quiver& q) {
    std::vector<VertexId> set;
    for (VertexId v = 0; v < q.vertex_count(); ++v)
        if (is_cyclebound(q, v))
            set.push_back(v);
    return set;
}

ExtNat c_out(const Quiver& q, VertexId e) {
    return q.c_[e];
}

ExtNat b_in(const Quiver& q, VertexId e) {
    return q.b_[e];
}

Path trivial_path(VertexId v) {
    return Path{v, v, {}};
}

Path make_path(const Quiver& q, VertexId source, std::vector<int> arrows) {
    if (source < 0 || source >= q.vertex_count())
        throw Error("path source out of range");
    VertexId at = source;
    for (int id : arrows) {
        if (id < 0 || id >= q.arrow_count())
            throw Error("path arrow id out of range");
        const Arrow& a = q.arrow(id);
        if (a.source != at)
            throw Error("path does not compose: arrow '" + a.label +
                        "' does not start at vertex '" + q.vertex_name(at) + "'");
        at = a.target;
    }
    return Path{source, at, std::move(arrows)};
}

Path extend(const Quiver& q, const Path& p, int arrow_id) {
    const Arrow& a = q.arrow(arrow_id);
    assert(a.source == p.target);
    Path ext = p;
    ext.arrows.push_back(arrow_id);
    ext.target = a.target;
    return ext;
}

bool is_initial_subpath(const Path& p, const Path& q) {
    if (p.source != q.source || p.length() > q.length())
        return false;
    return std::equal(p.arrows.begin(), p.arrows.end(), q.arrows.begin());
}

bool canonical_less(const Path& a, const Path& b) {
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.arrows != b.arrows)
        return a.arrows < b.arrows;
    return a.source < b.source;
}

std::vector<Path> enumerate_paths(const Quiver& q, VertexId from, int max_len) {
    assert(max_len >= 0);
    std::vector<Path> all{trivial_path(from)};
    size_t level_begin = 0;
    for (int len = 0; len < max_len; ++len) {
        size_t level_end = all.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (int id : q.arrows_out(all[i].target))
                all.push_back(extend(q, all[i], id));
        if (all.size() == level_end)
            break;
        level_begin = level_end;
    }
    return all;
}

std::string format_path(const Quiver& q, const Path& p) {
    if (p.length() == 0)
        return q.vertex_name(p.source);
    std::string text;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!text.empty())
            text += '*';
        text += q.arrow(*it).label;
    }
    return text;
}

}  // namespace tpa
