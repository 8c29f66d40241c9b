#include "tpa/generic.hpp"

#include <algorithm>
#include <cassert>

namespace tpa {

namespace {

void check_shape(const TruncatedAlgebra& alg, const SemisimpleSequence& S) {
    if (S.layers() != alg.L + 1 || S.vertices() != alg.quiver.vertex_count())
        throw Error("semisimple sequence shape mismatch");
    if ((S.counts.array() < 0).any())
        throw Error("semisimple sequence entries must be nonnegative");
}

}  // namespace

bool realizable(const TruncatedAlgebra& alg, const SemisimpleSequence& S) {
    check_shape(alg, S);
    const Eigen::MatrixXi& A = alg.quiver.arrow_count_matrix();
    for (int l = 0; l + 1 <= alg.L; ++l) {
        Eigen::VectorXi capacity = A * S.counts.row(l).transpose();
        if ((S.counts.row(l + 1).transpose().array() > capacity.array()).any())
            return false;
    }
    return true;
}

LayerDecomposition layer_decomposition(const TruncatedAlgebra& alg,
                                       const SemisimpleSequence& S) {
    if (!realizable(alg, S))
        throw Error("sequence not embeddable in projective cover layers");
    const Eigen::MatrixXi& A = alg.quiver.arrow_count_matrix();
    LayerDecomposition out{S, Eigen::MatrixXi::Zero(S.layers(), S.vertices())};
    Eigen::VectorXi paths = S.counts.row(0).transpose();
    for (int l = 1; l <= alg.L; ++l) {
        paths = A * paths;
        out.r.row(l) = (paths.transpose() - S.counts.row(l)).eval();
    }
    assert((out.r.array() >= 0).all());
    return out;
}

ExtNat generic_pdim(const TruncatedAlgebra& alg, const SemisimpleSequence& S) {
    LayerDecomposition dec = layer_decomposition(alg, S);
    if (dec.r.isZero())
        return ExtNat(0);
    ExtNat best(0);
    for (int l = 1; l <= alg.L; ++l)
        for (VertexId i = 0; i < S.vertices(); ++i)
            if (dec.r(l, i) > 0)
                best = std::max(best, l_deg(alg, l, c_out(alg.quiver, i)));
    return ExtNat(1) + best;
}

std::vector<ExtNat> SpectrumReport::full_set() const {
    std::vector<ExtNat> set{generic};
    set.insert(set.end(), others.begin(), others.end());
    return set;
}

SpectrumReport spectrum(const TruncatedAlgebra& alg,
                        const SemisimpleSequence& S) {
    SpectrumReport report;
    report.generic = generic_pdim(alg, S);
    for (int l = 1; l <= alg.L; ++l)
        for (VertexId j = 0; j < S.vertices(); ++j)
            if (S.counts(l, j) > 0) {
                ExtNat v = ExtNat(1) + l_deg(alg, l, c_out(alg.quiver, j));
                if (report.generic < v)
                    report.others.push_back(v);
            }
    std::sort(report.others.begin(), report.others.end());
    report.others.erase(
            std::unique(report.others.begin(), report.others.end()),
            report.others.end());
    return report;
}

bool seq_leq(const SemisimpleSequence& S, const SemisimpleSequence& S2) {
    if (S.layers() != S2.layers() || S.vertices() != S2.vertices())
        throw Error("semisimple sequence shape mismatch");
    Eigen::RowVectorXi cum = Eigen::RowVectorXi::Zero(S.vertices());
    Eigen::RowVectorXi cum2 = cum;
    for (int l = 0; l < S.layers(); ++l) {
        cum += S.counts.row(l);
        cum2 += S2.counts.row(l);
        if (l + 1 < S.layers() && (cum.array() > cum2.array()).any())
            return false;
    }
    return cum == cum2;
}

void for_each_geq(const TruncatedAlgebra& alg, const SemisimpleSequence& S,
                  int dimension_cap,
                  const std::function<void(const SemisimpleSequence&)>& visit) {
    check_shape(alg, S);
    if (S.dimension() > dimension_cap)
        throw Error("enumeration cap exceeded: dim S = " +
                    std::to_string(S.dimension()) + " > " +
                    std::to_string(dimension_cap));

    const int n = S.vertices();
    const int L = alg.L;
    const Eigen::MatrixXi& A = alg.quiver.arrow_count_matrix();

    Eigen::RowVectorXi total = S.counts.colwise().sum();
    Eigen::MatrixXi cum_s = S.counts;
    for (int l = 1; l <= L; ++l)
        cum_s.row(l) += cum_s.row(l - 1);

    Eigen::MatrixXi rows = Eigen::MatrixXi::Zero(L + 1, n);
    Eigen::RowVectorXi used = Eigen::RowVectorXi::Zero(n);

    // Chooses row `level`, vertex by vertex, then recurses into the next
    // level. Bounds: cumulative domination of S from below, remaining
    // per-vertex quota and arrow capacity A * previous row from above,
    // plus a lookahead check that the remaining quota still fits into
    // the capacities generated by the freshly chosen row.
    auto choose_level = [&](auto&& self, int level) -> void {
        if (level > L) {
            visit(SemisimpleSequence{rows});
            return;
        }
        Eigen::RowVectorXi lo = (cum_s.row(level) - used).cwiseMax(0);
        Eigen::RowVectorXi hi = total - used;
        if (level > 0) {
            Eigen::RowVectorXi capacity =
                    (A * rows.row(level - 1).transpose()).transpose();
            hi = hi.cwiseMin(capacity);
        }
        if (level == L) {
            // Last row is forced to the remaining quota, still subject
            // to the capacity bound already folded into hi.
            lo = total - used;
            hi = hi.cwiseMin(lo);
        }
        if ((lo.array() > hi.array()).any())
            return;

        auto choose_vertex = [&](auto&& inner, int i) -> void {
            if (i == n) {
                if (level < L) {
                    Eigen::VectorXi feed = rows.row(level).transpose();
                    Eigen::VectorXi room = Eigen::VectorXi::Zero(n);
                    for (int k = level + 1; k <= L; ++k) {
                        feed = A * feed;
                        room += feed;
                    }
                    for (int j = 0; j < n; ++j)
                        if (total(j) - used(j) - rows(level, j) > room(j))
                            return;
                }
                used += rows.row(level);
                self(self, level + 1);
                used -= rows.row(level);
                return;
            }
            for (int v = lo(i); v <= hi(i); ++v) {
                rows(level, i) = v;
                inner(inner, i + 1);
            }
            rows(level, i) = 0;
        };
        choose_vertex(choose_vertex, 0);
    };
    choose_level(choose_level, 0);
}

std::vector<SemisimpleSequence> enumerate_geq(const TruncatedAlgebra& alg,
                                              const SemisimpleSequence& S,
                                              int dimension_cap) {
    std::vector<SemisimpleSequence> all;
    for_each_geq(alg, S, dimension_cap,
                 [&](const SemisimpleSequence& S2) { all.push_back(S2); });
    return all;
}

SpectrumCheck spectrum_check(const TruncatedAlgebra& alg,
                             const SemisimpleSequence& S, int dimension_cap) {
    SpectrumCheck check;
    check.expected = spectrum(alg, S);
    for_each_geq(alg, S, dimension_cap, [&](const SemisimpleSequence& S2) {
        ++check.sequence_count;
        ExtNat v = generic_pdim(alg, S2);
        auto it = std::lower_bound(check.enumerated.begin(),
                                   check.enumerated.end(), v);
        if (it == check.enumerated.end() || *it != v)
            check.enumerated.insert(it, v);
    });
    std::vector<ExtNat> expected = check.expected.full_set();
    std::sort(expected.begin(), expected.end());
    check.match = expected == check.enumerated;
    return check;
}

TreeModule tree_T(const TruncatedAlgebra& alg, VertexId i) {
    const Quiver& q = alg.quiver;
    std::vector<SlotPath> relations;
    // Frontier: paths from e_i all of whose positive-length initial
    // subpaths end at cyclebound vertices; arrow extensions leaving the
    // cyclebound region are exactly the minimal relations p_ij.
    std::vector<Path> frontier{trivial_path(i)};
    for (int len = 0; len < alg.L && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (int id : q.arrows_out(p.target)) {
                Path ext = extend(q, p, id);
                if (is_cyclebound(q, ext.target))
                    next.push_back(std::move(ext));
                else
                    relations.push_back({0, std::move(ext)});
            }
        frontier = std::move(next);
    }
    MonomialModule m = make_module(alg, {i}, std::move(relations));
    return treeify(m).front();
}

}  // namespace tpa
