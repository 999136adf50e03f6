#pragma once

#include <string>
#include <vector>

#include "accinfo/linalg.hpp"

namespace accinfo {

/// |sum of weights - 1| allowed on a valid ensemble.
inline constexpr double kTraceSumTol = 1e-8;
/// Spectral-norm residual allowed on POVM completeness.
inline constexpr double kCompletenessTol = 1e-9;

/// Weighted statistical operators. Each op carries its own weight as its
/// trace; a valid ensemble has hermitian PSD ops with traces summing to 1.
struct Ensemble {
    int dim = 0;
    std::vector<CMatrix> ops;

    int size() const { return static_cast<int>(ops.size()); }
    double weight(int j) const { return ops[j].trace().real(); }
    double total_weight() const;
};

/// Measurement in factor form: outcomes are Π_k = A_k† A_k, which keeps them
/// PSD for any factors; completeness Σ_k Π_k = 1 is maintained by the
/// routines that construct and update POVMs.
struct Povm {
    int dim = 0;
    std::vector<CMatrix> factors;

    int size() const { return static_cast<int>(factors.size()); }
    CMatrix outcome(int k) const { return factors[k].adjoint() * factors[k]; }
    std::vector<CMatrix> outcomes() const;
};

/// ‖Σ_k A_k†A_k − 1‖ in spectral norm.
double completeness_residual(const Povm& p);

/// Joint outcome probabilities p_jk = tr(ρ_j Π_k) with both marginals.
struct ProbTable {
    Eigen::MatrixXd joint;           // J x K
    Eigen::VectorXd row_marginals;   // p_j. = Σ_k p_jk
    Eigen::VectorXd col_marginals;   // p_.k = Σ_j p_jk

    int rows() const { return static_cast<int>(joint.rows()); }
    int cols() const { return static_cast<int>(joint.cols()); }
};

struct Violation {
    enum class Kind { NotSquare, DimensionMismatch, NotHermitian, NotPsd, TraceSum };
    Kind kind;
    int index;         // offending operator, -1 for ensemble-wide
    double magnitude;  // residual / eigenvalue / trace sum
    std::string message;
};

/// Collects every violated constraint instead of failing fast; an empty
/// report means the ensemble is valid.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate_ensemble(const Ensemble& e);

/// Throws DimensionMismatch when shapes disagree. Entries are clamped
/// to [0, 1]; marginals are recomputed from the clamped joint.
ProbTable probability_table(const Ensemble& e, const Povm& m);

}  // namespace accinfo
