#pragma once

#include <boost/multiprecision/gmp.hpp>

#include "tpa/linalg.hpp"
#include "tpa/modules.hpp"

namespace tpa {

using Rational = boost::multiprecision::mpq_rational;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// Explicit module over the truncated algebra: per-vertex dimensions
/// and one exact-rational matrix per arrow a: i -> j mapping the e_i
/// block into the e_j block. Independent of the path-combinatorics
/// layer; used to verify it.
struct MatrixModule {
    TruncatedAlgebra alg;
    Eigen::VectorXi dims;
    std::vector<RationalMatrix> action;
};

/// Validates block shapes and the truncation relation (every composite
/// of L+1 arrow actions vanishes). Throws Error on violation.
MatrixModule make_matrix_module(TruncatedAlgebra alg, Eigen::VectorXi dims,
                                std::vector<RationalMatrix> action);

int total_dim(const MatrixModule& M);

/// Path basis realization of a monomial module: basis = canonical
/// skeleton, actions are 0/1 matrices sending path p to αp when αp
/// survives.
MatrixModule from_monomial(const MonomialModule& m);

/// Per-vertex dimensions of M/JM, where JM = sum of all arrow images.
Eigen::VectorXi top(const MatrixModule& M);

/// dims(l, i) = dim of the e_i block of J^l M / J^{l+1} M, computed by
/// ranks of iterated radical images.
Eigen::MatrixXi radical_layering_dims(const MatrixModule& M);

struct SyzygyStep {
    MatrixModule kernel;
    std::vector<VertexId> cover_slots;
    /// Kernel ⊆ J P, certified by vanishing of all length-0 cover
    /// coordinates.
    bool minimal = false;
};

/// Kernel of the minimal projective cover P(top M) -> M, computed
/// blockwise by exact elimination.
SyzygyStep syzygy_step(const MatrixModule& M);

struct PdimResult {
    bool exact = false;
    /// Exact value when exact, else a certified lower bound.
    int value = 0;
};

struct ResolutionTrace {
    std::vector<std::vector<VertexId>> covers;
    PdimResult pdim;
};

/// 2 n (L + 1): comfortably above findim at desk scale.
int default_depth_bound(const TruncatedAlgebra& alg);

/// Iterates minimal covers: Exact(k) when the (k+1)-st syzygy is the
/// first zero one, AtLeast(bound) when no syzygy up to `bound` vanishes
/// (a minimal resolution of that length certifies pdim >= bound).
/// Throws Error unless bound >= 1.
ResolutionTrace pdim_upto(const MatrixModule& M, int bound);

/// Greedy skeleton: choose unit-vector top lifts, extend chosen paths
/// by arrows, keep per layer a set independent modulo the next radical
/// power. seed = 0 processes candidates in canonical order; any other
/// seed shuffles the tie-breaking (the result is still a skeleton).
Skeleton skeleton_extract(const MatrixModule& M, unsigned long seed = 0);

}  // namespace tpa
