#include "accinfo/info.hpp"

#include <algorithm>
#include <cmath>

namespace accinfo {

double mutual_information(const ProbTable& t) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(t.joint.size()));
    for (int j = 0; j < t.rows(); ++j) {
        for (int k = 0; k < t.cols(); ++k) {
            const double p = t.joint(j, k);
            if (p > 0.0) {
                terms.push_back(
                    p * std::log2(p / (t.row_marginals(j) *
                                       t.col_marginals(k))));
            }
        }
    }
    // Value-ordered accumulation: the sum does not depend on how rows or
    // columns were ordered in the table.
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double term : terms) sum += term;
    return sum;
}

GradientSet gradient_operators(const Ensemble& e, const ProbTable& t) {
    if (t.rows() != e.size()) {
        throw DimensionMismatch(
            "gradient_operators: table rows do not match ensemble size");
    }
    GradientSet g;
    g.rks.reserve(static_cast<std::size_t>(t.cols()));
    for (int k = 0; k < t.cols(); ++k) {
        CMatrix r = CMatrix::Zero(e.dim, e.dim);
        for (int j = 0; j < t.rows(); ++j) {
            const double p = t.joint(j, k);
            const double marg = t.row_marginals(j) * t.col_marginals(k);
            // Clamped logarithm: vanished entries pull with a finite
            // strength instead of diverging at the simplex boundary.
            const double num = std::max(p, kProbClamp);
            const double den = std::max(marg, kProbClamp * kProbClamp);
            r += std::log2(num / den) * e.ops[j];
        }
        g.rks.push_back(symmetrized(r));
    }
    return g;
}

double von_neumann_entropy_bits(const CMatrix& rho) {
    const HermitianEig eig = hermitian_eig(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda > kProbClamp) s -= lambda * std::log2(lambda);
    }
    return s;
}

double holevo_bound(const Ensemble& e) {
    const ValidationReport report = validate_ensemble(e);
    if (!report.ok()) {
        throw InvalidEnsemble("holevo_bound: " + report.to_string());
    }
    CMatrix average = CMatrix::Zero(e.dim, e.dim);
    for (const CMatrix& op : e.ops) average += op;

    double chi = von_neumann_entropy_bits(average);
    for (int j = 0; j < e.size(); ++j) {
        const double w = e.weight(j);
        if (w <= kProbClamp) continue;
        chi -= w * von_neumann_entropy_bits(e.ops[j] / w);
    }
    return chi;
}

}  // namespace accinfo
