#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tpa/quiver.hpp"

namespace tpa {

/// Truncated path algebra KQ/I with I generated by all paths of length
/// L + 1. Nonzero paths have length <= L; the Loewy length is L + 1.
struct TruncatedAlgebra {
    Quiver quiver;
    int L = 1;
};

/// Throws Error unless L >= 1.
TruncatedAlgebra make_algebra(Quiver q, int L);

/// l-deg(c) = floor(c / (L+1)) + floor((c + l) / (L+1)), with
/// l-deg(infinity) = infinity. Requires 0 <= l <= L (throws Error).
///
/// For a path q of length l >= 1 ending at e, pdim Λq = l-deg(c(e)).
ExtNat l_deg(const TruncatedAlgebra& alg, int l, ExtNat c);

/// Projective dimension of the cyclic left ideal Λq: 0 for length-0 q
/// (Λe is projective), otherwise l_deg(len(q), c_out(target(q))).
/// Throws Error if len(q) > L.
ExtNat pdim_cyclic(const TruncatedAlgebra& alg, const Path& q);

struct CyclicSyzygy {
    /// Branches of the tree module Λq: maximal paths of length
    /// <= L - len(q) from target(q), canonical order.
    std::vector<Path> branches;
    /// Generators of Ω¹(Λq): all arrow extensions of the full-length
    /// branches that are nonzero in Λ, canonical order.
    std::vector<Path> generators;
};

/// Branch description of Λq together with its syzygy generators.
/// Throws Error if len(q) > L.
CyclicSyzygy branches_and_syzygy_of_cyclic(const TruncatedAlgebra& alg,
                                           const Path& q);

/// Projective dimension of the simple module S_i = Λe_i/Je_i: 0 for a
/// sink, infinite iff e_i is cyclebound, otherwise via the syzygy
/// Je_i = ⊕_α Λα over arrows α out of e_i.
ExtNat pdim_simple(const TruncatedAlgebra& alg, VertexId i);

struct FindimReport {
    /// max{pdim Λq : q a path of positive length, pdim finite}, or -1
    /// when every such pdim is infinite or no such path exists.
    int s = -1;
    /// s + 1, or 0 when s = -1.
    int findim = 0;
    /// (vertex, length) realizing s: a length-`second` path ending at
    /// `first` attains the maximum.
    std::optional<std::pair<VertexId, int>> witness;
    /// Longest path through non-cyclebound vertices only; absent when
    /// every vertex is cyclebound.
    std::optional<int> m;
    /// Lower end of the bracket [B, B+1] containing findim, where
    /// B = 1 + 1-deg(m - 1) for m >= 1 and B = 0 for m = 0; absent
    /// with m.
    std::optional<int> bracket_low;
};

/// Finitistic dimension of Λ (little = big for truncated path
/// algebras), by scanning (vertex, maximal incoming length) pairs.
FindimReport findim(const TruncatedAlgebra& alg);

}  // namespace tpa
