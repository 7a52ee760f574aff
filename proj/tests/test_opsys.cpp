#include <doctest.h>

#include <cmath>

#include "nccube/hermlin.hpp"
#include "nccube/opsys.hpp"

using namespace nccube;

namespace {

// brute-force level-1 oracle: minimum of a0 + sum g_i a_i over sign tuples
double signTupleOracle(double a0, const std::vector<double>& a) {
    const int n = static_cast<int>(a.size());
    double best = std::numeric_limits<double>::infinity();
    for (int mask = 0; mask < (1 << n); ++mask) {
        double v = a0;
        for (int i = 0; i < n; ++i) v += ((mask >> i) & 1 ? 1.0 : -1.0) * a[static_cast<size_t>(i)];
        best = std::min(best, v);
    }
    return best;
}

}  // namespace

TEST_CASE("kernel dimensions match the displayed spans") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(kernelBasis(KernelName::Jn, n).dim() == n - 1);
        CHECK(kernelBasis(KernelName::Qn, n).dim() == n - 1);
        CHECK(kernelBasis(KernelName::Kn1, n).dim() == 2 * n);
        CHECK(kernelBasis(KernelName::Ln1, n).dim() == 2 * n);
        CHECK(kernelBasis(KernelName::D0, n).dim() == n);
        CHECK(kernelBasis(KernelName::Sn0, n).dim() == n);
    }
}

TEST_CASE("kernel bases are linearly independent") {
    for (int n = 2; n <= 5; ++n)
        for (KernelName name : {KernelName::Jn, KernelName::Qn, KernelName::Kn1, KernelName::Ln1, KernelName::D0}) {
            const KernelSubspace ks = kernelBasis(name, n);
            // Gram determinant nonzero via eigenvalues of the Gram matrix
            const int d = ks.dim();
            ComplexMatrix gram(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    double s = 0;
                    for (size_t t = 0; t < ks.basisVectors[static_cast<size_t>(i)].size(); ++t)
                        s += ks.basisVectors[static_cast<size_t>(i)][t] * ks.basisVectors[static_cast<size_t>(j)][t];
                    gram(i, j) = s;
                }
            CHECK(minEig(HermitianMatrix(gram)) > 1e-9);
        }
}

TEST_CASE("fixed kernel vectors") {
    SUBCASE("J_2 is the alternating pair vector") {
        const KernelSubspace j2 = kernelBasis(KernelName::Jn, 2);
        REQUIRE(j2.dim() == 1);
        CHECK(j2.basisVectors[0] == std::vector<double>{1, 1, -1, -1});
    }
    SUBCASE("Q_2 equals J_2, they diverge from n = 3") {
        const KernelSubspace q2 = kernelBasis(KernelName::Qn, 2);
        REQUIRE(q2.dim() == 1);
        CHECK(q2.basisVectors[0] == std::vector<double>{1, 1, -1, -1});
        const KernelSubspace q3 = kernelBasis(KernelName::Qn, 3);
        CHECK(q3.basisVectors[1] == std::vector<double>{1, 1, 1, 1, -1, -1});
        const KernelSubspace j3 = kernelBasis(KernelName::Jn, 3);
        CHECK(j3.basisVectors[1] == std::vector<double>{1, 1, 0, 0, -1, -1});
    }
    SUBCASE("S_n^0 satisfies the defining equations") {
        // coefficients over {1, u_i, u_i*}: lambda_0 = 0 and the u_i, u_i*
        // coefficients cancel pairwise
        for (int n = 1; n <= 4; ++n) {
            const KernelSubspace s = kernelBasis(KernelName::Sn0, n);
            for (const auto& v : s.basisVectors) {
                CHECK(v[0] == 0.0);
                for (int i = 1; i <= n; ++i) CHECK(v[static_cast<size_t>(i)] + v[static_cast<size_t>(n + i)] == 0.0);
            }
        }
    }
}

TEST_CASE("null subspace verdicts") {
    SUBCASE("the catalog kernels are null") {
        for (int n = 2; n <= 4; ++n) {
            CHECK(isNullSubspace(kernelBasis(KernelName::Jn, n)).isNull);
            CHECK(isNullSubspace(kernelBasis(KernelName::Qn, n)).isNull);
            CHECK(isNullSubspace(kernelBasis(KernelName::Kn1, n)).isNull);
            CHECK(isNullSubspace(kernelBasis(KernelName::Ln1, n)).isNull);
            CHECK(isNullSubspace(kernelBasis(KernelName::D0, n)).isNull);
        }
    }
    SUBCASE("a span containing a positive vector is rejected with witness") {
        KernelSubspace bad;
        bad.ambient = SystemId{SystemKind::CubeVector, 2};
        bad.basisVectors = {{1, 1, 0, 0}};
        const NullCheckResult r = isNullSubspace(bad);
        CHECK(!r.isNull);
        REQUIRE(r.witness.has_value());
        const ComplexMatrix w = *r.witness;
        CHECK(minEig(HermitianMatrix(w)) >= -1e-7);
        CHECK(w.frobeniusNorm() > 1e-6);
        // witness stays inside the span: proportional to diag(1,1,0,0)
        CHECK(std::abs(w(0, 0).real() - w(1, 1).real()) < 1e-7);
        CHECK(std::abs(w(2, 2).real()) < 1e-7);
        CHECK(std::abs(w(3, 3).real()) < 1e-7);
    }
    SUBCASE("a span with a PSD matrix combination is rejected") {
        // span{E11 - E22, E12 + E21} in M_2 contains no PSD element except 0,
        // while span{E11, E12 + E21} does contain E11.
        KernelSubspace nullish;
        nullish.ambient = SystemId{SystemKind::FullMatrix, 1};
        nullish.basisVectors = {{1, 0, 0, -1}, {0, 1, 1, 0}};
        CHECK(isNullSubspace(nullish).isNull);
        KernelSubspace bad;
        bad.ambient = SystemId{SystemKind::FullMatrix, 1};
        bad.basisVectors = {{1, 0, 0, 0}, {0, 1, 1, 0}};
        const NullCheckResult r = isNullSubspace(bad);
        CHECK(!r.isNull);
        REQUIRE(r.witness.has_value());
        CHECK(minEig(HermitianMatrix(*r.witness)) >= -1e-7);
    }
    SUBCASE("unsupported ambient throws") {
        CHECK_THROWS_AS(isNullSubspace(kernelBasis(KernelName::Sn0, 2)), InvalidInput);
    }
}

TEST_CASE("level-1 closed form") {
    SUBCASE("fixed examples against the sign oracle") {
        CHECK(level1PositivityNC(2, 1.0, {0.5, 0.5}).cls == Level1Class::Boundary);
        CHECK(signTupleOracle(1.0, {0.5, 0.5}) == doctest::Approx(0.0));
        const Level1Result sp = level1PositivityNC(2, 2.0, {0.5, 0.5});
        CHECK(sp.cls == Level1Class::StronglyPositive);
        CHECK(sp.margin == doctest::Approx(1.0));
        CHECK(signTupleOracle(2.0, {0.5, 0.5}) == doctest::Approx(1.0));
        const Level1Result np = level1PositivityNC(2, 1.0, {0.6, 0.6});
        CHECK(np.cls == Level1Class::NotPositive);
        CHECK(np.margin == doctest::Approx(-0.2));
        CHECK(np.witnessSigns == std::vector<int>{-1, -1});
    }
    SUBCASE("exhaustive grid agreement with the oracle") {
        const std::vector<double> avals = {-1.0, -0.5, 0.0, 0.5, 1.0};
        for (int n = 1; n <= 4; ++n) {
            std::vector<size_t> idx(static_cast<size_t>(n), 0);
            while (true) {
                std::vector<double> a;
                for (int i = 0; i < n; ++i) a.push_back(avals[idx[static_cast<size_t>(i)]]);
                for (double a0 = 0.0; a0 <= 3.0; a0 += 0.5) {
                    const Level1Result r = level1PositivityNC(n, a0, a);
                    const double oracle = signTupleOracle(a0, a);
                    CHECK(r.margin == doctest::Approx(oracle).epsilon(1e-12));
                    if (oracle > 1e-9) CHECK(r.cls == Level1Class::StronglyPositive);
                    if (oracle < -1e-9) {
                        CHECK(r.cls == Level1Class::NotPositive);
                        double witnessValue = a0;
                        for (int i = 0; i < n; ++i) witnessValue += r.witnessSigns[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
                        CHECK(witnessValue == doctest::Approx(oracle));
                    }
                }
                int pos = 0;
                while (pos < n && ++idx[static_cast<size_t>(pos)] == avals.size()) idx[static_cast<size_t>(pos++)] = 0;
                if (pos == n) break;
            }
        }
    }
}

TEST_CASE("graph degree multiset check") {
    CHECK(!graphDistinguishTR(1));
    CHECK(!graphDistinguishTR(2));
    for (int n = 3; n <= 6; ++n) CHECK(graphDistinguishTR(n));
}

TEST_CASE("dual pairing") {
    TensorElement j2vec = TensorElement::zero({SystemKind::CubeVector, 2}, 1);
    ComplexMatrix one(1, 1), minus(1, 1);
    one(0, 0) = 1.0;
    minus(0, 0) = -1.0;
    j2vec.setCoeff("e1", one);
    j2vec.setCoeff("e2", one);
    j2vec.setCoeff("e3", minus);
    j2vec.setCoeff("e4", minus);
    CHECK(dualPairingCheck(2, {1, 0, 1, 0}, j2vec) == doctest::Approx(0.0));

    TensorElement allOnes = TensorElement::zero({SystemKind::CubeVector, 2}, 1);
    for (int i = 1; i <= 4; ++i) allOnes.setCoeff("e" + std::to_string(i), one);
    CHECK(dualPairingCheck(2, {1, 0, 1, 0}, allOnes) == doctest::Approx(2.0));

    CHECK_THROWS_AS(dualPairingCheck(2, {1, 0, 0.5, 0}, allOnes), InvalidInput);
}

TEST_CASE("element hermiticity handling") {
    TensorElement x = TensorElement::zero({SystemKind::NCCube, 2}, 2);
    ComplexMatrix h(2, 2);
    h(0, 1) = Complex(0, 1);
    h(1, 0) = Complex(0, -1);
    x.setCoeff("h1", h);
    CHECK(x.isHermitianElement());
    ComplexMatrix bad(2, 2);
    bad(0, 1) = 1.0;
    x.setCoeff("h2", bad);
    CHECK(!x.isHermitianElement());

    TensorElement s = TensorElement::zero({SystemKind::UnitaryGen, 2}, 2);
    s.setCoeff("u1", bad);  // u* implied adjoint: Hermitian as an element
    CHECK(s.isHermitianElement());
    CHECK((s.starCoeff(1) - bad.adjoint()).maxAbsEntry() == 0.0);
    s.setCoeff("u1*", bad);  // explicit but wrong adjoint
    CHECK(!s.isHermitianElement());
}
