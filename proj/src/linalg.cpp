#include "accinfo/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace accinfo {

double RngState::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngState::gaussian() {
    // u1 in (0, 1] keeps the logarithm finite.
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double herm_residual(const CMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix symmetrized(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

HermitianEig hermitian_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("hermitian_eig: matrix is not square");
    }
    const double residual = herm_residual(m);
    if (residual > kHermTol) {
        std::ostringstream os;
        os << "hermitian_eig: matrix is not hermitian (residual " << residual
           << ")";
        throw NotHermitian(os.str());
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrized(m));
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double default_pseudo_floor(const RealVector& eigenvalues) {
    const double top = eigenvalues.size() > 0 ? eigenvalues.maxCoeff() : 0.0;
    return 1e-12 * std::max(top, 0.0);
}

CMatrix inv_sqrt_from_eig(const HermitianEig& eig, double floor) {
    RealVector f(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double lambda = eig.eigenvalues(i);
        f(i) = lambda > floor ? 1.0 / std::sqrt(lambda) : 0.0;
    }
    return eig.eigenvectors * f.asDiagonal() * eig.eigenvectors.adjoint();
}

namespace {

void require_psd(const RealVector& eigenvalues, const char* who) {
    if (eigenvalues.size() > 0 && eigenvalues(0) < -kPsdTol) {
        std::ostringstream os;
        os << who << ": negative eigenvalue " << eigenvalues(0);
        throw NotPsd(os.str());
    }
}

}  // namespace

CMatrix inv_sqrt_psd(const CMatrix& m) {
    const HermitianEig eig = hermitian_eig(m);
    require_psd(eig.eigenvalues, "inv_sqrt_psd");
    return inv_sqrt_from_eig(eig, default_pseudo_floor(eig.eigenvalues));
}

CMatrix inv_sqrt_psd(const CMatrix& m, double floor) {
    const HermitianEig eig = hermitian_eig(m);
    require_psd(eig.eigenvalues, "inv_sqrt_psd");
    return inv_sqrt_from_eig(eig, floor);
}

CMatrix sqrt_psd(const CMatrix& m) {
    const HermitianEig eig = hermitian_eig(m);
    if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) < -1e-8) {
        std::ostringstream os;
        os << "sqrt_psd: negative eigenvalue " << eig.eigenvalues(0);
        throw NotPsd(os.str());
    }
    RealVector f(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        f(i) = std::sqrt(std::max(eig.eigenvalues(i), 0.0));
    }
    return eig.eigenvectors * f.asDiagonal() * eig.eigenvectors.adjoint();
}

CMatrix random_gaussian_matrix(int dim, RngState& rng) {
    if (dim < 1) {
        throw std::invalid_argument("random_gaussian_matrix: dim must be >= 1");
    }
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionMismatch("trace_product: incompatible shapes");
    }
    // tr(ab) = Σ_ij a_ij b_ji without forming the product.
    return (a.cwiseProduct(b.transpose())).sum();
}

double spectral_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double min_eigenvalue_hermitian(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrized(m),
                                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace accinfo
