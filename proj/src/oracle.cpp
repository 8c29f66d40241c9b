#include "tpa/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <utility>

namespace tpa {

namespace {

// Column bases of the radical powers: chain[l][i] spans the e_i block
// of J^l M, for l = 0..L+1.
std::vector<std::vector<RationalMatrix>> radical_chain(
        const TruncatedAlgebra& alg, const Eigen::VectorXi& dims,
        const std::vector<RationalMatrix>& action) {
    const Quiver& q = alg.quiver;
    const int n = q.vertex_count();
    std::vector<std::vector<RationalMatrix>> chain;
    std::vector<RationalMatrix> full(n);
    for (int i = 0; i < n; ++i)
        full[i] = RationalMatrix::Identity(dims(i), dims(i));
    chain.push_back(std::move(full));
    for (int l = 1; l <= alg.L + 1; ++l) {
        std::vector<SpanTracker<Rational>> span;
        span.reserve(n);
        for (int i = 0; i < n; ++i)
            span.emplace_back(dims(i));
        for (int a = 0; a < q.arrow_count(); ++a) {
            const Arrow& arrow = q.arrow(a);
            if (chain[l - 1][arrow.source].cols() > 0)
                span[arrow.target].insert_columns(action[a] *
                                                  chain[l - 1][arrow.source]);
        }
        std::vector<RationalMatrix> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = span[i].basis_columns();
        chain.push_back(std::move(next));
    }
    return chain;
}

struct TopData {
    Eigen::VectorXi dims;
    // Unit coordinates lifting a basis of the e_j block of M/JM.
    std::vector<std::vector<Eigen::Index>> lifts;
};

TopData top_data(const MatrixModule& M) {
    const Quiver& q = M.alg.quiver;
    const int n = q.vertex_count();
    TopData t{Eigen::VectorXi::Zero(n), std::vector<std::vector<Eigen::Index>>(n)};
    for (int j = 0; j < n; ++j) {
        SpanTracker<Rational> span(M.dims(j));
        for (int a : q.arrows_in(j))
            span.insert_columns(M.action[a]);
        for (Eigen::Index k = 0; k < M.dims(j); ++k) {
            RationalVector unit = RationalVector::Zero(M.dims(j));
            unit(k) = 1;
            if (span.insert(unit))
                t.lifts[j].push_back(k);
        }
        t.dims(j) = static_cast<int>(t.lifts[j].size());
    }
    return t;
}

}  // namespace

MatrixModule make_matrix_module(TruncatedAlgebra alg, Eigen::VectorXi dims,
                                std::vector<RationalMatrix> action) {
    const Quiver& q = alg.quiver;
    if (dims.size() != q.vertex_count())
        throw Error("dimension vector size mismatch");
    if ((dims.array() < 0).any())
        throw Error("negative block dimension");
    if (static_cast<int>(action.size()) != q.arrow_count())
        throw Error("one action matrix per arrow required");
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrow(a);
        if (action[a].rows() != dims(arrow.target) ||
            action[a].cols() != dims(arrow.source))
            throw Error("action matrix shape mismatch for arrow '" +
                        arrow.label + "'");
    }
    for (const RationalMatrix& b : radical_chain(alg, dims, action)[alg.L + 1])
        if (b.cols() > 0)
            throw Error("truncation violated: J^{L+1} M != 0");
    return MatrixModule{std::move(alg), std::move(dims), std::move(action)};
}

int total_dim(const MatrixModule& M) {
    return M.dims.sum();
}

MatrixModule from_monomial(const MonomialModule& m) {
    const Quiver& q = m.alg.quiver;
    const int n = q.vertex_count();
    Skeleton sigma = skeleton(m);

    Eigen::VectorXi dims = Eigen::VectorXi::Zero(n);
    std::map<std::pair<int, std::vector<int>>, std::pair<int, int>> pos;
    for (const SlotPath& sp : sigma.paths) {
        VertexId v = sp.path.target;
        pos[{sp.slot, sp.path.arrows}] = {v, dims(v)};
        dims(v) += 1;
    }

    std::vector<RationalMatrix> action(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrow(a);
        action[a] = RationalMatrix::Zero(dims(arrow.target), dims(arrow.source));
    }
    for (const SlotPath& sp : sigma.paths)
        for (int a : q.arrows_out(sp.path.target)) {
            std::vector<int> ext = sp.path.arrows;
            ext.push_back(a);
            auto it = pos.find({sp.slot, ext});
            if (it == pos.end())
                continue;
            auto from = pos.at({sp.slot, sp.path.arrows});
            action[a](it->second.second, from.second) = 1;
        }
    return MatrixModule{m.alg, std::move(dims), std::move(action)};
}

Eigen::VectorXi top(const MatrixModule& M) {
    return top_data(M).dims;
}

Eigen::MatrixXi radical_layering_dims(const MatrixModule& M) {
    auto chain = radical_chain(M.alg, M.dims, M.action);
    const int n = M.alg.quiver.vertex_count();
    Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(M.alg.L + 1, n);
    for (int l = 0; l <= M.alg.L; ++l)
        for (int i = 0; i < n; ++i)
            counts(l, i) = static_cast<int>(chain[l][i].cols() -
                                            chain[l + 1][i].cols());
    return counts;
}

SyzygyStep syzygy_step(const MatrixModule& M) {
    const Quiver& q = M.alg.quiver;
    const int n = q.vertex_count();
    const int L = M.alg.L;
    TopData tops = top_data(M);

    // Cover slots (vertex order, then unit order) with their lifts.
    std::vector<VertexId> slots;
    std::vector<RationalVector> lift;
    for (int j = 0; j < n; ++j)
        for (Eigen::Index k : tops.lifts[j]) {
            RationalVector u = RationalVector::Zero(M.dims(j));
            u(k) = 1;
            slots.push_back(j);
            lift.push_back(std::move(u));
        }

    // Path basis of P = ⊕_r Λe_{slots[r]}, indexed per vertex block,
    // with the value act(p) · lift_r attached to every slot path.
    std::vector<std::vector<Path>> slot_paths(slots.size());
    std::vector<std::vector<RationalVector>> value(slots.size());
    std::map<std::pair<int, std::vector<int>>, int> pos;
    std::vector<std::vector<std::pair<int, int>>> block(n);
    std::vector<int> trivial_row(slots.size(), -1);
    for (int r = 0; r < static_cast<int>(slots.size()); ++r) {
        slot_paths[r] = enumerate_paths(q, slots[r], L);
        value[r].resize(slot_paths[r].size());
        std::map<std::vector<int>, int> local;
        for (int p = 0; p < static_cast<int>(slot_paths[r].size()); ++p) {
            const Path& path = slot_paths[r][p];
            local[path.arrows] = p;
            if (path.length() == 0) {
                value[r][p] = lift[r];
            } else {
                std::vector<int> parent(path.arrows.begin(),
                                        path.arrows.end() - 1);
                value[r][p] = M.action[path.arrows.back()] *
                              value[r][local.at(parent)];
            }
            VertexId v = path.target;
            pos[{r, path.arrows}] = static_cast<int>(block[v].size());
            if (path.length() == 0)
                trivial_row[r] = static_cast<int>(block[v].size());
            block[v].push_back({r, p});
        }
    }

    // Cover map kernels, blockwise.
    std::vector<RationalMatrix> kernel(n);
    Eigen::VectorXi kdims = Eigen::VectorXi::Zero(n);
    for (int i = 0; i < n; ++i) {
        RationalMatrix phi(M.dims(i), block[i].size());
        for (int c = 0; c < static_cast<int>(block[i].size()); ++c)
            phi.col(c) = value[block[i][c].first][block[i][c].second];
        kernel[i] = kernel_basis(std::move(phi));
        kdims(i) = static_cast<int>(kernel[i].cols());
    }

    // Minimality: kernel vectors have no component on length-0 basis
    // elements of P.
    bool minimal = true;
    for (int r = 0; r < static_cast<int>(slots.size()); ++r) {
        const auto& row = kernel[slots[r]].row(trivial_row[r]);
        for (Eigen::Index c = 0; c < row.size(); ++c)
            if (row(c) != 0)
                minimal = false;
    }

    // Arrow actions on the kernel, in kernel coordinates.
    std::vector<RationalMatrix> action(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrow(a);
        RationalMatrix w = RationalMatrix::Zero(block[arrow.target].size(),
                                                kdims(arrow.source));
        for (int c = 0; c < static_cast<int>(block[arrow.source].size()); ++c) {
            auto [r, p] = block[arrow.source][c];
            std::vector<int> ext = slot_paths[r][p].arrows;
            ext.push_back(a);
            if (static_cast<int>(ext.size()) > L)
                continue;
            w.row(pos.at({r, ext})) += kernel[arrow.source].row(c);
        }
        auto x = solve_exact(kernel[arrow.target], std::move(w));
        if (!x)
            throw Error("internal: kernel not stable under arrow action");
        action[a] = std::move(*x);
    }

    return SyzygyStep{MatrixModule{M.alg, std::move(kdims), std::move(action)},
                      std::move(slots), minimal};
}

int default_depth_bound(const TruncatedAlgebra& alg) {
    return 2 * alg.quiver.vertex_count() * (alg.L + 1);
}

ResolutionTrace pdim_upto(const MatrixModule& M, int bound) {
    if (bound < 1)
        throw Error("resolution depth bound must be >= 1");
    ResolutionTrace trace;
    if (total_dim(M) == 0) {
        trace.pdim = {true, 0};
        return trace;
    }
    MatrixModule current = M;
    for (int k = 1; k <= bound; ++k) {
        SyzygyStep step = syzygy_step(current);
        if (!step.minimal)
            throw Error("internal: non-minimal cover in resolution");
        trace.covers.push_back(std::move(step.cover_slots));
        current = std::move(step.kernel);
        if (total_dim(current) == 0) {
            trace.pdim = {true, k - 1};
            return trace;
        }
    }
    trace.pdim = {false, bound};
    return trace;
}

Skeleton skeleton_extract(const MatrixModule& M, unsigned long seed) {
    const Quiver& q = M.alg.quiver;
    const int n = q.vertex_count();
    auto chain = radical_chain(M.alg, M.dims, M.action);
    std::optional<std::mt19937_64> rng;
    if (seed != 0)
        rng.emplace(seed);

    struct Chosen {
        int slot;
        Path path;
        RationalVector vec;
    };

    Skeleton sigma;
    std::vector<Chosen> layer;

    // Layer 0: unit lifts of a top basis; selection order fixes the
    // slot indexing.
    {
        std::vector<std::pair<int, Eigen::Index>> units;
        for (int j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < M.dims(j); ++k)
                units.push_back({j, k});
        if (rng)
            std::shuffle(units.begin(), units.end(), *rng);
        std::vector<SpanTracker<Rational>> span;
        for (int j = 0; j < n; ++j) {
            span.emplace_back(M.dims(j));
            span.back().insert_columns(chain[1][j]);
        }
        for (auto [j, k] : units) {
            RationalVector u = RationalVector::Zero(M.dims(j));
            u(k) = 1;
            if (span[j].insert(u)) {
                int slot = static_cast<int>(layer.size());
                sigma.paths.push_back({slot, trivial_path(j)});
                layer.push_back({slot, trivial_path(j), std::move(u)});
            }
        }
    }

    for (int l = 0; l < M.alg.L && !layer.empty(); ++l) {
        std::vector<std::pair<int, int>> candidates;  // (chosen index, arrow)
        for (int c = 0; c < static_cast<int>(layer.size()); ++c)
            for (int a : q.arrows_out(layer[c].path.target))
                candidates.push_back({c, a});
        if (rng)
            std::shuffle(candidates.begin(), candidates.end(), *rng);
        std::vector<SpanTracker<Rational>> span;
        for (int j = 0; j < n; ++j) {
            span.emplace_back(M.dims(j));
            span.back().insert_columns(chain[l + 2][j]);
        }
        std::vector<Chosen> next;
        for (auto [c, a] : candidates) {
            RationalVector w = M.action[a] * layer[c].vec;
            VertexId j = q.arrow(a).target;
            if (span[j].insert(w)) {
                Path ext = extend(q, layer[c].path, a);
                sigma.paths.push_back({layer[c].slot, ext});
                next.push_back({layer[c].slot, std::move(ext), std::move(w)});
            }
        }
        layer = std::move(next);
    }

    std::sort(sigma.paths.begin(), sigma.paths.end(),
              [](const SlotPath& a, const SlotPath& b) {
                  return canonical_less(a, b);
              });
    return sigma;
}

}  // namespace tpa
