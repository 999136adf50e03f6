#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

#include "accinfo/errors.hpp"

namespace accinfo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Entrywise tolerance below which a matrix counts as hermitian.
inline constexpr double kHermTol = 1e-10;
/// Eigenvalues above -kPsdTol count as nonnegative.
inline constexpr double kPsdTol = 1e-10;

/// Deterministic random stream: mt19937_64 with 53-bit uniforms and an
/// explicit Box-Muller transform (no cached spare). Two streams with the
/// same seed produce identical sequences bit for bit; independent streams
/// are obtained by seeding with distinct values. Single-owner, not shared
/// between threads.
class RngState {
  public:
    explicit RngState(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution. One engine word per call.
    double uniform01();

    /// Standard normal. Consumes exactly two engine words per call.
    double gaussian();

  private:
    std::mt19937_64 engine_;
};

/// max_ij |m - m†|.
double herm_residual(const CMatrix& m);

/// (m + m†) / 2.
CMatrix symmetrized(const CMatrix& m);

struct HermitianEig {
    RealVector eigenvalues;  // ascending
    CMatrix eigenvectors;    // unitary, columns match eigenvalues
};

/// Eigendecomposition of a hermitian matrix. The input is symmetrized before
/// decomposition; throws NotHermitian if herm_residual(m) > kHermTol.
HermitianEig hermitian_eig(const CMatrix& m);

/// Default pseudo-inversion floor: 1e-12 times the largest eigenvalue.
double default_pseudo_floor(const RealVector& eigenvalues);

/// V f(λ) V† with f(λ) = 1/sqrt(λ) for λ > floor and 0 otherwise.
CMatrix inv_sqrt_from_eig(const HermitianEig& eig, double floor);

/// Pseudo-inverse square root of a PSD matrix. Throws NotPsd if an
/// eigenvalue lies below -kPsdTol. The one-argument form uses the
/// default relative floor.
CMatrix inv_sqrt_psd(const CMatrix& m);
CMatrix inv_sqrt_psd(const CMatrix& m, double floor);

/// Hermitian PSD square root; small negative eigenvalues (>= -1e-8) are
/// clamped to zero, anything lower throws NotPsd.
CMatrix sqrt_psd(const CMatrix& m);

/// dim x dim matrix with independent standard-normal real and imaginary
/// parts. Entries are drawn row-major, real part before imaginary part.
CMatrix random_gaussian_matrix(int dim, RngState& rng);

/// tr(a b).
Complex trace_product(const CMatrix& a, const CMatrix& b);

/// Largest singular value.
double spectral_norm(const CMatrix& m);

/// Smallest eigenvalue of a (symmetrized) hermitian matrix.
double min_eigenvalue_hermitian(const CMatrix& m);

}  // namespace accinfo
