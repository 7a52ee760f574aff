#include <doctest.h>

#include "nccube/hermlin.hpp"
#include "nccube/maxcone.hpp"
#include "nccube/riesz.hpp"
#include "nccube/rng.hpp"

using namespace nccube;

namespace {

HermitianMatrix hscalar(double v) { return HermitianMatrix::diagonal({v}); }

}  // namespace

TEST_CASE("verifyScheme on hand-checked tuples") {
    SUBCASE("valid scalar scheme") {
        RieszScheme s;
        s.a1 = hscalar(2.0);
        s.a2 = hscalar(2.0);
        s.b = {hscalar(0.3), hscalar(0.3)};
        s.x = {hscalar(0.5), hscalar(0.5)};
        s.margin = 0.1;
        const SchemeCheck c = verifyScheme(s);
        CHECK(c.valid);
        CHECK(c.worstSlack == doctest::Approx(0.1));  // x_i - b_i = 0.2 against margin 0.1
    }
    SUBCASE("x_i = 0 fails strict positivity") {
        RieszScheme s;
        s.a1 = hscalar(2.0);
        s.a2 = hscalar(2.0);
        s.b = {hscalar(-1.0)};
        s.x = {hscalar(0.0)};
        s.margin = 1e-6;
        CHECK(!verifyScheme(s).valid);
    }
    SUBCASE("a1 equal to the x-sum has no slack") {
        RieszScheme s;
        s.a1 = hscalar(1.0);
        s.a2 = hscalar(2.0);
        s.b = {hscalar(0.0)};
        s.x = {hscalar(1.0)};
        s.margin = 1e-6;
        CHECK(!verifyScheme(s).valid);
    }
}

TEST_CASE("subalgebra specs") {
    SUBCASE("diagonal algebra in M_2") {
        const SubalgebraSpec d = SubalgebraSpec::diagonal(2);
        CHECK(d.hermDim() == 2);
        CHECK(d.containsHermitian(HermitianMatrix::diagonal({1.0, -2.0})));
        ComplexMatrix off(2, 2);
        off(0, 1) = off(1, 0) = 1.0;
        CHECK(!d.containsHermitian(HermitianMatrix(off)));
    }
    SUBCASE("block-diagonal algebra") {
        const SubalgebraSpec b = SubalgebraSpec::blockDiagonal({2, 1});
        CHECK(b.k() == 3);
        CHECK(b.hermDim() == 5);
    }
    SUBCASE("permutation span of the full cycle on 3 points") {
        const SubalgebraSpec p = SubalgebraSpec::permutationSpan(3, {{1, 2, 0}});
        // cyclic group C3: span of 3 permutation matrices, abelian
        CHECK(p.hermDim() == 3);
        CHECK(p.containsHermitian(HermitianMatrix::identity(3)));
    }
    SUBCASE("non *-closed span is rejected") {
        // span{I, E01} is closed under products but not adjoints
        std::vector<std::vector<int>> none;
        ComplexMatrix e01(2, 2);
        e01(0, 1) = 1.0;
        CHECK_THROWS_AS(SubalgebraSpec::permutationSpan(2, {{0, 1, 1}}), InvalidInput);  // bad permutation length
    }
}

TEST_CASE("solveScheme on fixed data") {
    SUBCASE("diagonal data in the diagonal algebra") {
        const SubalgebraSpec diag = SubalgebraSpec::diagonal(2);
        const HermitianMatrix a = HermitianMatrix::diagonal({2.0, 2.0});
        const std::vector<HermitianMatrix> b = {HermitianMatrix::diagonal({0.5, 0.5})};
        const SchemeSolveResult r = solveScheme(a, a, b, diag);
        REQUIRE(r.found());
        CHECK(verifyScheme(*r.scheme).valid);
        RieszScheme atTol = *r.scheme;
        atTol.margin = 1e-6;
        CHECK(verifyScheme(atTol).valid);
    }
    SUBCASE("infeasible data") {
        const SubalgebraSpec full = SubalgebraSpec::full(1);
        // need x >= b = 3 but a1 = 1 >= x: impossible
        const SchemeSolveResult r = solveScheme(hscalar(1.0), hscalar(1.0), {hscalar(3.0)}, full);
        CHECK(!r.found());
        CHECK(r.feas.status == FeasStatus::Infeasible);
    }
    SUBCASE("data outside the algebra span is rejected") {
        const SubalgebraSpec diag = SubalgebraSpec::diagonal(2);
        ComplexMatrix off(2, 2);
        off(0, 1) = off(1, 0) = 1.0;
        CHECK_THROWS_AS(solveScheme(HermitianMatrix(off), HermitianMatrix::identity(2), {}, diag), InvalidInput);
    }
}

TEST_CASE("full-algebra scheme decision equals the diagonal lifting route exactly") {
    Rng rng(404);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + trial % 2;
        const int k = 1 + trial % 2;
        const TensorElement x = randomNCElement(n, k, 7000 + static_cast<uint64_t>(trial));
        // scheme data of the diagonal route
        HermitianMatrix common(x.coeff("1"));
        HermitianMatrix a1hat = common;
        std::vector<HermitianMatrix> bs;
        {
            std::vector<HermitianMatrix> a;
            for (int i = 1; i <= n; ++i) a.emplace_back(x.coeff("h" + std::to_string(i)));
            HermitianMatrix c = HermitianMatrix(x.coeff("1"));
            for (int j = 2; j <= n; ++j) c -= a[static_cast<size_t>(j - 1)];
            a1hat = c;
            a1hat += a[0];
            a1hat *= static_cast<double>(n);
            common = c;
            common -= a[0];
            common *= static_cast<double>(n);
            for (int j = 2; j <= n; ++j) {
                HermitianMatrix bi = a[static_cast<size_t>(j - 1)];
                bi *= -2.0 * n;
                bs.push_back(std::move(bi));
            }
        }
        const MaxConeResult viaRoute = maxMembership(x, MaxRoute::Diagonal);
        const SchemeSolveResult viaScheme = solveScheme(a1hat, common, bs, SubalgebraSpec::fullCached(k));
        CHECK(viaRoute.feas.status == viaScheme.feas.status);
        CHECK(viaRoute.feas.margin == viaScheme.feas.margin);  // bitwise: same problem, same engine path
    }
}

TEST_CASE("1-Riesz property at desk scale: diagonal data") {
    // whenever the full-algebra solve succeeds with real margin on diagonal
    // data, the diagonal-constrained solve succeeds as well
    int found = 0;
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(seed * 13 + 5);
        const int k = 2 + static_cast<int>(seed % 3);
        std::vector<double> d1, d2, db;
        for (int i = 0; i < k; ++i) {
            d1.push_back(1.0 + rng.uniform());
            d2.push_back(1.0 + rng.uniform());
            db.push_back(rng.uniformSym() * 0.8);
        }
        const HermitianMatrix a1 = HermitianMatrix::diagonal(d1);
        const HermitianMatrix a2 = HermitianMatrix::diagonal(d2);
        const std::vector<HermitianMatrix> b = {HermitianMatrix::diagonal(db)};
        const SchemeSolveResult fullSolve = solveScheme(a1, a2, b, SubalgebraSpec::fullCached(k));
        if (!fullSolve.found() || fullSolve.feas.margin < 1e-3) continue;
        ++found;
        const SchemeSolveResult diagSolve = solveScheme(a1, a2, b, SubalgebraSpec::diagonal(k));
        CHECK(diagSolve.found());
        CHECK(verifyScheme(*diagSolve.scheme).valid);
    }
    CHECK(found >= 10);
}

TEST_CASE("2-Riesz in the diagonal algebra at desk scale") {
    int found = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed * 17 + 3);
        const int k = 2 + static_cast<int>(seed % 2);
        std::vector<double> d1, d2, db1, db2;
        for (int i = 0; i < k; ++i) {
            d1.push_back(1.5 + rng.uniform());
            d2.push_back(1.5 + rng.uniform());
            db1.push_back(rng.uniformSym() * 0.6);
            db2.push_back(rng.uniformSym() * 0.6);
        }
        const HermitianMatrix a1 = HermitianMatrix::diagonal(d1);
        const HermitianMatrix a2 = HermitianMatrix::diagonal(d2);
        const std::vector<HermitianMatrix> b = {HermitianMatrix::diagonal(db1), HermitianMatrix::diagonal(db2)};
        const SchemeSolveResult fullSolve = solveScheme(a1, a2, b, SubalgebraSpec::fullCached(k));
        if (!fullSolve.found() || fullSolve.feas.margin < 1e-3) continue;
        ++found;
        const SchemeSolveResult diagSolve = solveScheme(a1, a2, b, SubalgebraSpec::diagonal(k));
        CHECK(diagSolve.found());
    }
    CHECK(found >= 8);
}

TEST_CASE("tight interpolation") {
    SUBCASE("scalar midpoint") {
        const SubalgebraSpec full1 = SubalgebraSpec::fullCached(1);
        const InterpolationResult r = trInterpolate({hscalar(2.0)}, {hscalar(0.0)}, full1);
        REQUIRE(r.found());
        CHECK((*r.y)(0, 0).real() == doctest::Approx(1.0).epsilon(0.05));
    }
    SUBCASE("scalar multiples squeeze between crossing diagonals") {
        // y = c I with 0 << cI << diag(1,3) and cI << diag(3,1): c in (0,1),
        // and the interval midpoint is c = 1/2
        const SubalgebraSpec scalarAlg = SubalgebraSpec::scalars(2);
        const InterpolationResult r = trInterpolate({HermitianMatrix::diagonal({1, 3}), HermitianMatrix::diagonal({3, 1})},
                                                    {HermitianMatrix::zero(2)}, scalarAlg);
        REQUIRE(r.found());
        const ComplexMatrix y = r.y->mat();
        CHECK(std::abs(y(0, 1)) == 0.0);
        CHECK(y(0, 0).real() == doctest::Approx(y(1, 1).real()));
        const double c = y(0, 0).real();
        CHECK(c > 0.0);
        CHECK(c < 1.0);
        CHECK(c == doctest::Approx(0.5).epsilon(0.05));
    }
    SUBCASE("no strict gap") {
        const SubalgebraSpec full1 = SubalgebraSpec::fullCached(1);
        const InterpolationResult r = trInterpolate({hscalar(1.0)}, {hscalar(1.0)}, full1);
        CHECK(!r.found());
    }
}
