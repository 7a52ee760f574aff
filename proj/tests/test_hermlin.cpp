#include <doctest.h>

#include <cmath>

#include "nccube/hermlin.hpp"
#include "nccube/rng.hpp"

using namespace nccube;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

double reconstructionResidual(const HermitianMatrix& m, const EighResult& e) {
    ComplexMatrix lam(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i) lam(i, i) = e.eigenvalues[static_cast<size_t>(i)];
    const ComplexMatrix lhs = m.mat() * e.eigenvectors;
    const ComplexMatrix rhs = e.eigenvectors * lam;
    return (lhs - rhs).frobeniusNorm();
}

// Independent dense sweep for the numerical radius, used to freeze expected
// values: no refinement, just a very fine grid.
double radiusSweepOracle(const ComplexMatrix& a, int points) {
    double best = 0;
    for (int i = 0; i < points; ++i) {
        const double th = 2.0 * M_PI * i / points;
        ComplexMatrix w = a;
        w *= Complex(std::cos(th), std::sin(th));
        best = std::max(best, maxEig(HermitianMatrix(w)));
    }
    return best;
}

}  // namespace

TEST_CASE("eigh on fixed small matrices") {
    SUBCASE("identity 3x3") {
        const EighResult e = eigh(HermitianMatrix::identity(3));
        for (double lam : e.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("diagonal ordering") {
        const EighResult e = eigh(HermitianMatrix::diagonal({3.0, -2.0}));
        CHECK(e.eigenvalues[0] == doctest::Approx(-2.0));
        CHECK(e.eigenvalues[1] == doctest::Approx(3.0));
    }
    SUBCASE("symmetric flip") {
        // characteristic polynomial x^2 - 1 by hand
        const HermitianMatrix m(mat2(0, 1, 1, 0));
        const EighResult e = eigh(m);
        CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("eigh residual and unitarity bounds on random Hermitian matrices") {
    Rng rng(7);
    for (int dim : {1, 2, 3, 5, 8, 12, 16}) {
        for (int rep = 0; rep < 4; ++rep) {
            const HermitianMatrix m = rng.gaussianHermitian(dim);
            const EighResult e = eigh(m);
            CHECK(reconstructionResidual(m, e) <= 1e-10 * (1.0 + m.frobeniusNorm()));
            const ComplexMatrix vtv = e.eigenvectors.adjoint() * e.eigenvectors;
            CHECK((vtv - ComplexMatrix::identity(dim)).frobeniusNorm() <= 1e-10);
            for (size_t i = 0; i + 1 < e.eigenvalues.size(); ++i) CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
        }
    }
}

TEST_CASE("minEig basics") {
    CHECK(minEig(HermitianMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(minEig(HermitianMatrix(mat2(0, 1, 1, 0))) == doctest::Approx(-1.0));
    CHECK(minEig(HermitianMatrix::zero(3)) == doctest::Approx(0.0));
}

TEST_CASE("psdProject") {
    SUBCASE("PSD input unchanged") {
        Rng rng(3);
        const ComplexMatrix g = rng.gaussianMatrix(4, 4);
        const HermitianMatrix psd(g.adjoint() * g);
        const HermitianMatrix p = psdProject(psd);
        CHECK((p.mat() - psd.mat()).frobeniusNorm() <= 1e-10 * (1 + psd.frobeniusNorm()));
    }
    SUBCASE("eigenvalue clipping") {
        const HermitianMatrix p = psdProject(HermitianMatrix::diagonal({1.0, -1.0}));
        CHECK(p(0, 0).real() == doctest::Approx(1.0));
        CHECK(p(1, 1).real() == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("negative definite goes to zero") {
        HermitianMatrix m = HermitianMatrix::identity(3);
        m *= -1.0;
        CHECK(psdProject(m).frobeniusNorm() <= 1e-12);
    }
    SUBCASE("output PSD and idempotent on random inputs") {
        Rng rng(11);
        for (int rep = 0; rep < 6; ++rep) {
            const HermitianMatrix m = rng.gaussianHermitian(6);
            const HermitianMatrix p = psdProject(m);
            CHECK(minEig(p) >= -1e-10);
            const HermitianMatrix pp = psdProject(p);
            CHECK((pp.mat() - p.mat()).frobeniusNorm() <= 1e-9);
        }
    }
}

TEST_CASE("opNorm") {
    CHECK(opNorm(ComplexMatrix::identity(3)) == doctest::Approx(1.0));
    CHECK(opNorm(HermitianMatrix::diagonal({2, -3}).mat()) == doctest::Approx(3.0));
    // singular values of [[0,2],[0,0]] are {2, 0} by hand
    CHECK(opNorm(mat2(0, 2, 0, 0)) == doctest::Approx(2.0));
}

TEST_CASE("numerical radius") {
    SUBCASE("Hermitian matrices: radius equals operator norm") {
        Rng rng(5);
        for (int rep = 0; rep < 4; ++rep) {
            const HermitianMatrix m = rng.gaussianHermitian(4);
            CHECK(numericalRadius(m.mat()) == doctest::Approx(opNorm(m.mat())).epsilon(1e-8));
        }
    }
    SUBCASE("nilpotent Jordan cell") {
        // lambda_max(Re(e^{it}N)) is constant 1/2 in t, so the sweep oracle
        // pins the value exactly
        const ComplexMatrix n = mat2(0, 1, 0, 0);
        CHECK(radiusSweepOracle(n, 1000) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(numericalRadius(n) == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("zero matrix") { CHECK(numericalRadius(ComplexMatrix(3, 3)) == doctest::Approx(0.0)); }
    SUBCASE("classical bounds and unitary invariance") {
        Rng rng(9);
        for (int rep = 0; rep < 4; ++rep) {
            const ComplexMatrix a = rng.gaussianMatrix(3, 3);
            const double w = numericalRadius(a, 360, 1e-9);
            const double nrm = opNorm(a);
            CHECK(w >= nrm / 2 - 1e-8);
            CHECK(w <= nrm + 1e-8);
            const ComplexMatrix u = unitaryExp(rng.gaussianHermitian(3), 1.0);
            const ComplexMatrix conj = u.adjoint() * a * u;
            CHECK(numericalRadius(conj, 360, 1e-9) == doctest::Approx(w).epsilon(1e-8));
        }
    }
}

TEST_CASE("invSqrt") {
    SUBCASE("identity") {
        const HermitianMatrix r = invSqrt(HermitianMatrix::identity(3), 1e-9);
        CHECK((r.mat() - ComplexMatrix::identity(3)).frobeniusNorm() <= 1e-12);
    }
    SUBCASE("diagonal") {
        const HermitianMatrix r = invSqrt(HermitianMatrix::diagonal({4, 9}), 1e-9);
        CHECK(r(0, 0).real() == doctest::Approx(0.5));
        CHECK(r(1, 1).real() == doctest::Approx(1.0 / 3));
    }
    SUBCASE("scaled identity") {
        HermitianMatrix m = HermitianMatrix::identity(3);
        m *= 4.0;
        const HermitianMatrix r = invSqrt(m, 1e-9);
        CHECK((r.mat() - ComplexMatrix::identity(3) * Complex(0.5, 0)).frobeniusNorm() <= 1e-12);
    }
    SUBCASE("defining identity on random positive matrices") {
        Rng rng(13);
        for (int rep = 0; rep < 4; ++rep) {
            const ComplexMatrix g = rng.gaussianMatrix(5, 5);
            HermitianMatrix m(g.adjoint() * g);
            m.addIdentity(0.5);
            const HermitianMatrix r = invSqrt(m, 1e-9);
            const ComplexMatrix should = r.mat() * m.mat() * r.mat();
            CHECK((should - ComplexMatrix::identity(5)).frobeniusNorm() <= 1e-8);
        }
    }
    SUBCASE("rejects non strongly positive input") {
        CHECK_THROWS_AS(invSqrt(HermitianMatrix::diagonal({1.0, 1e-12}), 1e-9), InvalidInput);
    }
}

TEST_CASE("hermitian symmetrisation at construction") {
    ComplexMatrix m = mat2(Complex(1, 1e-14), Complex(2, 3), Complex(2, -3 + 1e-13), 5);
    const HermitianMatrix h(m);
    CHECK(h.mat().hermitianDefect() == 0.0);
    CHECK(h(0, 0).imag() == 0.0);
}
