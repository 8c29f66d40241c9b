#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/extnat.hpp"

namespace tpa {

/// Index into Quiver's vertex list (0-based, dense, stable).
using VertexId = int;

struct Arrow {
    int id = -1;
    std::string label;
    VertexId source = -1;
    VertexId target = -1;
};

/// Unvalidated quiver description (endpoints by vertex name), as read
/// from input or assembled programmatically.
struct QuiverData {
    struct ArrowData {
        std::string label;
        std::string source;
        std::string target;
    };

    std::string name;
    std::vector<std::string> vertices;
    std::vector<ArrowData> arrows;
};

/// Finite directed multigraph, immutable after validation. Loops and
/// parallel arrows are permitted; vertex names and arrow labels are
/// unique. Cycle and longest-path statistics are precomputed, so all
/// queries are O(1) and safe for concurrent shared use.
class Quiver {
public:
    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const Arrow& arrow(int id) const { return arrows_[id]; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<int> find_arrow(std::string_view label) const;

    /// Outgoing / incoming arrow ids of a vertex, sorted by id.
    std::span<const int> arrows_out(VertexId v) const { return out_[v]; }
    std::span<const int> arrows_in(VertexId v) const { return in_[v]; }

    /// A(j, i) = number of arrows i -> j.
    const Eigen::MatrixXi& arrow_count_matrix() const { return count_; }

    friend Quiver validate(QuiverData data);
    friend bool is_cyclebound(const Quiver& q, VertexId e);
    friend bool reachable_from_cycle(const Quiver& q, VertexId e);
    friend ExtNat c_out(const Quiver& q, VertexId e);
    friend ExtNat b_in(const Quiver& q, VertexId e);

private:
    Quiver() = default;

    std::string name_;
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    Eigen::MatrixXi count_;
    std::vector<char> cyclebound_;
    std::vector<char> from_cycle_;
    std::vector<ExtNat> c_;
    std::vector<ExtNat> b_;
    std::unordered_map<std::string, int> vertex_by_name_;
    std::unordered_map<std::string, int> arrow_by_label_;
};

/// Checks the raw data (nonempty vertex set, unique names and labels,
/// no dangling endpoints) and precomputes cycle and longest-path data.
/// Throws Error on invalid input.
Quiver validate(QuiverData data);

/// True iff some vertex on an oriented cycle is reachable from e
/// (e itself counts via the trivial path).
bool is_cyclebound(const Quiver& q, VertexId e);

/// True iff e is reachable from some vertex on an oriented cycle.
bool reachable_from_cycle(const Quiver& q, VertexId e);

/// All cyclebound vertices, ascending.
std::vector<VertexId> cyclebound_set(const Quiver& q);

/// Supremum of lengths of paths starting at e; infinite iff e is
/// cyclebound.
ExtNat c_out(const Quiver& q, VertexId e);

/// Supremum of lengths of paths ending at e; infinite iff e is
/// reachable from a cycle.
ExtNat b_in(const Quiver& q, VertexId e);

/// Path in the quiver: a composable arrow sequence stored in traversal
/// order (arrows[0] leaves source). Composition is written right to
/// left, so the rendered form of (arrows a, b) is "b*a". A length-0
/// path carries only its vertex.
struct Path {
    VertexId source = -1;
    VertexId target = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }

    friend bool operator==(const Path&, const Path&) = default;
};

Path trivial_path(VertexId v);

/// Builds a path from `source` along `arrows`; throws Error if the
/// sequence does not compose.
Path make_path(const Quiver& q, VertexId source, std::vector<int> arrows);

/// Appends one arrow at the target of p (must start there).
Path extend(const Quiver& q, const Path& p, int arrow_id);

/// True iff q = p'p for some path p'. The length-0 path at source(q)
/// is an initial subpath of every q.
bool is_initial_subpath(const Path& p, const Path& q);

/// Canonical path order: by length, then lexicographically by arrow id
/// sequence, then by source vertex.
bool canonical_less(const Path& a, const Path& b);

/// All paths of length <= max_len starting at `from`, in canonical
/// order. Prefix-closed and deterministic.
std::vector<Path> enumerate_paths(const Quiver& q, VertexId from, int max_len);

/// Right-to-left arrow label rendering ("a3*b4*a3"); the vertex name
/// for a length-0 path.
std::string format_path(const Quiver& q, const Path& p);

}  // namespace tpa
