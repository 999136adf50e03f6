#include <catch2/catch.hpp>

#include "accinfo/linalg.hpp"
#include "helpers.hpp"

using namespace accinfo;

TEST_CASE("hermitian_eig on the identity", "[linalg]") {
    const HermitianEig eig = hermitian_eig(CMatrix::Identity(2, 2));
    REQUIRE(eig.eigenvalues(0) == Approx(1.0));
    REQUIRE(eig.eigenvalues(1) == Approx(1.0));
    const CMatrix vtv = eig.eigenvectors.adjoint() * eig.eigenvectors;
    REQUIRE((vtv - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hermitian_eig sorts eigenvalues ascending", "[linalg]") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 3.0;
    m(1, 1) = -1.0;
    const HermitianEig eig = hermitian_eig(m);
    REQUIRE(eig.eigenvalues(0) == Approx(-1.0));
    REQUIRE(eig.eigenvalues(1) == Approx(3.0));
}

TEST_CASE("hermitian_eig reconstructs random inputs", "[linalg]") {
    RngState rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 5;
        const CMatrix h = testutil::random_hermitian(dim, rng);
        const HermitianEig eig = hermitian_eig(h);
        const CMatrix back = eig.eigenvectors *
                             eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                             eig.eigenvectors.adjoint();
        REQUIRE((back - h).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("hermitian_eig rejects non-hermitian input", "[linalg]") {
    CMatrix m(2, 2);
    m << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
    REQUIRE_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("inv_sqrt_psd on diagonal cases", "[linalg]") {
    REQUIRE((inv_sqrt_psd(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3))
                .cwiseAbs()
                .maxCoeff() < 1e-12);

    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const CMatrix r = inv_sqrt_psd(d);
    REQUIRE(r(0, 0).real() == Approx(0.5).margin(1e-12));
    REQUIRE(r(1, 1).real() == Approx(1.0 / 3.0).margin(1e-12));
    REQUIRE(std::abs(r(0, 1)) < 1e-12);
}

TEST_CASE("inv_sqrt_psd satisfies its defining property", "[linalg]") {
    RngState rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = 2 + trial % 4;
        const CMatrix s =
            testutil::random_psd(dim, rng) + 1e-3 * CMatrix::Identity(dim, dim);
        const CMatrix t = inv_sqrt_psd(s);
        REQUIRE(herm_residual(t) < 1e-10);
        REQUIRE(min_eigenvalue_hermitian(t) > -1e-10);
        REQUIRE((t * s * t - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <=
                1e-8);
    }
}

TEST_CASE("inv_sqrt_psd rejects indefinite input", "[linalg]") {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -1.0;
    REQUIRE_THROWS_AS(inv_sqrt_psd(d), NotPsd);
}

TEST_CASE("inv_sqrt_psd drops modes at the floor", "[linalg]") {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1.0;  // second eigenvalue exactly 0
    const CMatrix t = inv_sqrt_psd(d);
    REQUIRE(t(0, 0).real() == Approx(1.0));
    REQUIRE(std::abs(t(1, 1)) < 1e-12);
}

TEST_CASE("random_gaussian_matrix is deterministic per seed", "[linalg]") {
    RngState a(7);
    RngState b(7);
    const CMatrix m1 = random_gaussian_matrix(2, a);
    const CMatrix m2 = random_gaussian_matrix(2, a);
    const CMatrix m1_replay = random_gaussian_matrix(2, b);

    REQUIRE((m1 - m1_replay).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE((m1 - m2).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("random_gaussian_matrix second moment", "[linalg]") {
    RngState rng(99);
    const int dim = 100;  // 10^4 entries
    const CMatrix m = random_gaussian_matrix(dim, rng);
    const double mean_sq = m.squaredNorm() / static_cast<double>(dim * dim);
    REQUIRE(mean_sq == Approx(2.0).margin(0.1));
}

TEST_CASE("trace_product matches the explicit product", "[linalg]") {
    RngState rng(3);
    const CMatrix a = random_gaussian_matrix(3, rng);
    const CMatrix b = random_gaussian_matrix(3, rng);
    const Complex direct = (a * b).trace();
    REQUIRE(std::abs(trace_product(a, b) - direct) < 1e-12);
}
