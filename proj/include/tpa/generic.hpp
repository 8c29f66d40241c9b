#pragma once

#include <functional>
#include <vector>

#include "tpa/modules.hpp"

namespace tpa {

/// Split of the projective cover layering: for P = ⊕_i (Λe_i)^{s(i,0)},
/// J^l P / J^{l+1} P ≅ (⊕ S_i^{s(i,l)}) ⊕ (⊕ S_i^{r(i,l)}).
struct LayerDecomposition {
    SemisimpleSequence s;
    Eigen::MatrixXi r;
};

/// True iff some module has radical layering S, decided by the
/// level-transfer test: s(., l+1) <= A s(., l) componentwise for all
/// 0 <= l < L, where A(j,i) = #arrows i -> j. A prefix-closed skeleton
/// assigns each level-(l+1) path a distinct (parent, arrow) pair, and
/// conversely any dominated row extends greedily, so the inequality is
/// exact. Throws Error on shape mismatch.
bool realizable(const TruncatedAlgebra& alg, const SemisimpleSequence& S);

/// r(i, l) = (#paths of length l from the slots of P ending at e_i)
/// - s(i, l). Throws Error if S is not realizable.
LayerDecomposition layer_decomposition(const TruncatedAlgebra& alg,
                                       const SemisimpleSequence& S);

/// Generic projective dimension on the stratum Mod(S): 0 iff r ≡ 0,
/// else 1 + sup{l-deg(c(e_i)) : r(i,l) != 0}. Throws Error if S is not
/// realizable.
ExtNat generic_pdim(const TruncatedAlgebra& alg, const SemisimpleSequence& S);

/// Values of pdim on the closure of Mod(S): the generic value plus
/// every 1 + l-deg(c(e_j)) with l >= 1, s(j,l) > 0 that exceeds it.
struct SpectrumReport {
    ExtNat generic;
    std::vector<ExtNat> others;  // ascending, each > generic

    std::vector<ExtNat> full_set() const;
};

SpectrumReport spectrum(const TruncatedAlgebra& alg,
                        const SemisimpleSequence& S);

/// Partial order on sequences with equal per-vertex totals: S <= S2
/// iff the cumulative counts satisfy sum_{l<=r} s(i,l) <=
/// sum_{l<=r} s2(i,l) for all i, r (simple summands move only up).
/// Throws Error on shape mismatch.
bool seq_leq(const SemisimpleSequence& S, const SemisimpleSequence& S2);

/// Visits every realizable S2 >= S in lexicographic row-major order.
/// Throws Error when dim S exceeds dimension_cap.
void for_each_geq(const TruncatedAlgebra& alg, const SemisimpleSequence& S,
                  int dimension_cap,
                  const std::function<void(const SemisimpleSequence&)>& visit);

/// Collects for_each_geq.
std::vector<SemisimpleSequence> enumerate_geq(const TruncatedAlgebra& alg,
                                              const SemisimpleSequence& S,
                                              int dimension_cap = 12);

/// Result of checking the spectrum against brute-force enumeration of
/// {generic_pdim(S2) : S2 >= S realizable}.
struct SpectrumCheck {
    bool match = false;
    std::vector<ExtNat> enumerated;  // ascending value set
    SpectrumReport expected;
    long long sequence_count = 0;
};

SpectrumCheck spectrum_check(const TruncatedAlgebra& alg,
                             const SemisimpleSequence& S, int dimension_cap);

/// The tree module T_i = Λe_i / εJe_i: relations are the minimal
/// positive-length paths from e_i ending at a non-cyclebound vertex
/// whose proper positive-length initial subpaths all end cyclebound.
/// max_i pdim(T_i) = findim Λ, and every T_i has finite pdim.
TreeModule tree_T(const TruncatedAlgebra& alg, VertexId i);

}  // namespace tpa
