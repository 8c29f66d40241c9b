#include "tpa/algebra.hpp"

#include <algorithm>

namespace tpa {

TruncatedAlgebra make_algebra(Quiver q, int L) {
    if (L < 1)
        throw Error("truncation length L must be >= 1");
    return TruncatedAlgebra{std::move(q), L};
}

ExtNat l_deg(const TruncatedAlgebra& alg, int l, ExtNat c) {
    if (l < 0 || l > alg.L)
        throw Error("l-degree defined for 0 <= l <= L only");
    if (!c.is_finite())
        return ExtNat::infinity();
    long long v = c.value();
    long long period = alg.L + 1;
    return ExtNat(v / period + (v + l) / period);
}

ExtNat pdim_cyclic(const TruncatedAlgebra& alg, const Path& q) {
    if (q.length() > alg.L)
        throw Error("not a path in the algebra: length exceeds L");
    if (q.length() == 0)
        return ExtNat(0);
    return l_deg(alg, q.length(), c_out(alg.quiver, q.target));
}

CyclicSyzygy branches_and_syzygy_of_cyclic(const TruncatedAlgebra& alg,
                                           const Path& q) {
    if (q.length() > alg.L)
        throw Error("not a path in the algebra: length exceeds L");
    const int budget = alg.L - q.length();
    CyclicSyzygy out;
    for (const Path& p : enumerate_paths(alg.quiver, q.target, budget)) {
        bool maximal = p.length() == budget || alg.quiver.arrows_out(p.target).empty();
        if (maximal)
            out.branches.push_back(p);
        // Arrow extensions of a branch survive in Λ only when the branch
        // is shorter than L; for len(q) = 0 the full-length branches
        // extend to length L + 1 and vanish.
        if (p.length() == budget && q.length() > 0)
            for (int id : alg.quiver.arrows_out(p.target))
                out.generators.push_back(extend(alg.quiver, p, id));
    }
    std::sort(out.branches.begin(), out.branches.end(), canonical_less);
    std::sort(out.generators.begin(), out.generators.end(), canonical_less);
    return out;
}

ExtNat pdim_simple(const TruncatedAlgebra& alg, VertexId i) {
    const Quiver& q = alg.quiver;
    if (q.arrows_out(i).empty())
        return ExtNat(0);
    if (is_cyclebound(q, i))
        return ExtNat::infinity();
    ExtNat best(0);
    for (int id : q.arrows_out(i))
        best = std::max(best, l_deg(alg, 1, c_out(q, q.arrow(id).target)));
    return ExtNat(1) + best;
}

FindimReport findim(const TruncatedAlgebra& alg) {
    const Quiver& q = alg.quiver;
    FindimReport report;

    // A path of positive length l ending at e exists iff
    // 1 <= l <= min(L, b_in(e)); its pdim l-deg(c(e)) is finite iff e
    // is non-cyclebound, and grows with l, so only the largest l per
    // vertex matters.
    for (VertexId e = 0; e < q.vertex_count(); ++e) {
        if (is_cyclebound(q, e))
            continue;
        ExtNat incoming = b_in(q, e);
        if (incoming == ExtNat(0))
            continue;
        int l = incoming.is_finite()
                        ? static_cast<int>(std::min<long long>(alg.L, incoming.value()))
                        : alg.L;
        ExtNat val = l_deg(alg, l, c_out(q, e));
        if (static_cast<long long>(report.s) < val.value()) {
            report.s = static_cast<int>(val.value());
            report.witness = {e, l};
        }
    }
    report.findim = report.s >= 0 ? report.s + 1 : 0;

    ExtNat longest(0);
    bool any = false;
    for (VertexId e = 0; e < q.vertex_count(); ++e)
        if (!is_cyclebound(q, e)) {
            any = true;
            longest = std::max(longest, c_out(q, e));
        }
    if (any) {
        int m = static_cast<int>(longest.value());
        report.m = m;
        report.bracket_low =
                m == 0 ? 0 : static_cast<int>(1 + l_deg(alg, 1, ExtNat(m - 1)).value());
    }
    return report;
}

}  // namespace tpa
