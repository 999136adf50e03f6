#pragma once

#include <vector>

#include "accinfo/model.hpp"

namespace accinfo {

/// Probabilities below this are treated as zero inside logarithms.
inline constexpr double kProbClamp = 1e-15;

/// Variational derivatives of the mutual information with respect to the
/// POVM outcomes: R_k = Σ_j ρ_j log2(p_jk / (p_j. p_.k)), hermitian.
struct GradientSet {
    std::vector<CMatrix> rks;

    int size() const { return static_cast<int>(rks.size()); }
};

/// Σ_jk p_jk log2(p_jk / (p_j. p_.k)) in bits; entries with p_jk = 0
/// contribute nothing. Terms are accumulated in value order, so the result
/// is invariant under permutations of the table's rows and columns.
double mutual_information(const ProbTable& t);

/// The R_k for the current table. Vanished entries use the clamped
/// logarithm log2(kProbClamp / (p_j. p_.k)) so boundary outcomes exert a
/// bounded pull. Each R_k is symmetrized.
GradientSet gradient_operators(const Ensemble& e, const ProbTable& t);

/// S(Σ_j ρ_j) − Σ_j w_j S(ρ_j / w_j) in bits; upper-bounds the mutual
/// information of any measurement on the ensemble. Throws InvalidEnsemble.
double holevo_bound(const Ensemble& e);

/// −Σ λ log2 λ over the eigenvalues of a unit-trace hermitian PSD matrix.
double von_neumann_entropy_bits(const CMatrix& rho);

}  // namespace accinfo
