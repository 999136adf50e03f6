#include "accinfo/reduce.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace accinfo {

namespace {

// Equivalent probabilities: p_jk1 p_.k2 == p_.k1 p_jk2 for every j, up to
// rel_tol scaled by the product of the column weights.
bool columns_equivalent(const Eigen::MatrixXd& joint,
                        const Eigen::VectorXd& col_marginals, int k1, int k2,
                        double rel_tol) {
    const double w1 = col_marginals(k1);
    const double w2 = col_marginals(k2);
    const double bound = rel_tol * w1 * w2;
    for (int j = 0; j < joint.rows(); ++j) {
        if (std::abs(joint(j, k1) * w2 - w1 * joint(j, k2)) > bound) {
            return false;
        }
    }
    return true;
}

}  // namespace

Povm merge_equivalent_outcomes(const Povm& p, const ProbTable& t,
                               double rel_tol) {
    if (t.cols() != p.size()) {
        throw DimensionMismatch(
            "merge_equivalent_outcomes: table columns do not match POVM");
    }

    std::vector<CMatrix> factors = p.factors;
    Eigen::MatrixXd joint = t.joint;
    Eigen::VectorXd cols = t.col_marginals;

    bool merged = true;
    while (merged) {
        merged = false;
        const int k_count = static_cast<int>(factors.size());
        for (int k1 = 0; k1 < k_count && !merged; ++k1) {
            for (int k2 = k1 + 1; k2 < k_count; ++k2) {
                if (!columns_equivalent(joint, cols, k1, k2, rel_tol)) {
                    continue;
                }
                const CMatrix sum = factors[k1].adjoint() * factors[k1] +
                                    factors[k2].adjoint() * factors[k2];
                factors[k1] = sqrt_psd(sum);
                factors.erase(factors.begin() + k2);

                // Column of the merged outcome is the exact sum.
                joint.col(k1) += joint.col(k2);
                cols(k1) += cols(k2);
                const int new_cols = static_cast<int>(joint.cols()) - 1;
                for (int k = k2; k < new_cols; ++k) {
                    joint.col(k) = joint.col(k + 1);
                    cols(k) = cols(k + 1);
                }
                joint.conservativeResize(Eigen::NoChange, new_cols);
                cols.conservativeResize(new_cols);

                merged = true;
                break;
            }
        }
    }
    return Povm{p.dim, std::move(factors)};
}

Povm drop_null_outcomes(const Povm& p, double abs_tol) {
    std::vector<CMatrix> kept;
    kept.reserve(p.factors.size());
    for (const CMatrix& a : p.factors) {
        // tr(A†A) is the squared Frobenius norm of the factor.
        if (a.squaredNorm() > abs_tol) kept.push_back(a);
    }
    if (kept.empty()) {
        throw EmptyPovm("drop_null_outcomes: every outcome is null");
    }
    if (kept.size() == p.factors.size()) return p;

    CMatrix s = CMatrix::Zero(p.dim, p.dim);
    for (const CMatrix& a : kept) s += a.adjoint() * a;
    const CMatrix t = inv_sqrt_psd(s);
    for (CMatrix& a : kept) a = a * t;
    return Povm{p.dim, std::move(kept)};
}

}  // namespace accinfo
