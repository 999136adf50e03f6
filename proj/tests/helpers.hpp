#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here (grid search, closed forms, finite differences) deliberately avoid
// the library's optimization path so they can vouch for it.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "accinfo/info.hpp"
#include "accinfo/linalg.hpp"
#include "accinfo/model.hpp"
#include "accinfo/optimizer.hpp"

namespace testutil {

using accinfo::CMatrix;
using accinfo::Complex;
using accinfo::Ensemble;
using accinfo::Povm;
using accinfo::RngState;

inline constexpr double kPi = std::numbers::pi;

inline CMatrix random_hermitian(int dim, RngState& rng) {
    return accinfo::symmetrized(accinfo::random_gaussian_matrix(dim, rng));
}

inline CMatrix random_psd(int dim, RngState& rng) {
    const CMatrix g = accinfo::random_gaussian_matrix(dim, rng);
    return g.adjoint() * g;
}

inline CMatrix random_unitary(int dim, RngState& rng) {
    const CMatrix g = accinfo::random_gaussian_matrix(dim, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    return qr.householderQ() * CMatrix::Identity(dim, dim);
}

/// Random valid ensemble: PSD operators with random weights summing to 1.
inline Ensemble random_ensemble(int dim, int num_ops, RngState& rng) {
    Ensemble e{dim, {}};
    std::vector<double> weights;
    double total = 0.0;
    for (int j = 0; j < num_ops; ++j) {
        weights.push_back(rng.uniform01() + 0.1);
        total += weights.back();
    }
    for (int j = 0; j < num_ops; ++j) {
        CMatrix p = random_psd(dim, rng);
        e.ops.push_back(p * (weights[j] / total / p.trace().real()));
    }
    return e;
}

inline Ensemble orthogonal_pair_ensemble() {
    Ensemble e{2, {}};
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 0.5;
    CMatrix b = CMatrix::Zero(2, 2);
    b(1, 1) = 0.5;
    e.ops = {a, b};
    return e;
}

/// Two equiprobable pure states |0> and cos(alpha)|0> + sin(alpha)|1>.
inline Ensemble two_state_ensemble(double alpha) {
    Ensemble e{2, {}};
    Eigen::Vector2cd psi0(1.0, 0.0);
    Eigen::Vector2cd psi1(std::cos(alpha), std::sin(alpha));
    e.ops.push_back(0.5 * (psi0 * psi0.adjoint()));
    e.ops.push_back(0.5 * (psi1 * psi1.adjoint()));
    return e;
}

/// Three equiprobable pure states 120 degrees apart on a great circle.
inline Ensemble trine_ensemble() {
    Ensemble e{2, {}};
    for (int m = 0; m < 3; ++m) {
        const double a = static_cast<double>(m) * kPi / 3.0;
        Eigen::Vector2cd psi(std::cos(a), std::sin(a));
        e.ops.push_back((psi * psi.adjoint()) / 3.0);
    }
    return e;
}

inline double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

/// Mutual information of the projective measurement along angle theta for
/// the two_state_ensemble(alpha), computed with plain scalars.
inline double two_state_projective_mi(double alpha, double theta) {
    const double overlap0 = std::cos(theta);
    const double overlap1 = std::cos(theta - alpha);
    const double p[2][2] = {
        {0.5 * overlap0 * overlap0, 0.5 * (1.0 - overlap0 * overlap0)},
        {0.5 * overlap1 * overlap1, 0.5 * (1.0 - overlap1 * overlap1)}};
    const double col0 = p[0][0] + p[1][0];
    const double col1 = p[0][1] + p[1][1];
    const double col[2] = {col0, col1};
    double mi = 0.0;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            if (p[j][k] > 0.0 && col[k] > 0.0) {
                mi += p[j][k] * std::log2(p[j][k] / (0.5 * col[k]));
            }
        }
    }
    return mi;
}

/// Exhaustive scan over qubit projective measurements.
inline double two_state_grid_search_mi(double alpha, double step = 1e-4) {
    double best = 0.0;
    for (double theta = 0.0; theta < kPi; theta += step) {
        best = std::max(best, two_state_projective_mi(alpha, theta));
    }
    return best;
}

/// First-order change of the outcomes along the renormalized step path,
/// contracted with the gradient operators.
inline double analytic_slope(const Povm& p, const accinfo::DirectionSet& d,
                             const accinfo::GradientSet& g) {
    CMatrix m = CMatrix::Zero(p.dim, p.dim);
    for (int k = 0; k < p.size(); ++k) {
        m += d[k].adjoint() * p.factors[k] + p.factors[k].adjoint() * d[k];
    }
    double slope = 0.0;
    for (int k = 0; k < p.size(); ++k) {
        const CMatrix pik = p.outcome(k);
        const CMatrix dpik = d[k].adjoint() * p.factors[k] +
                             p.factors[k].adjoint() * d[k] -
                             0.5 * (m * pik + pik * m);
        slope += accinfo::trace_product(dpik, g.rks[k]).real();
    }
    return slope;
}

inline double max_outcome_negativity(const Povm& p) {
    double worst = 0.0;
    for (int k = 0; k < p.size(); ++k) {
        worst = std::min(worst, accinfo::min_eigenvalue_hermitian(p.outcome(k)));
    }
    return worst;
}

}  // namespace testutil
