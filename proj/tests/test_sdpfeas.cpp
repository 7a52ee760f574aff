#include <doctest.h>

#include <cmath>

#include "nccube/hermlin.hpp"
#include "nccube/rng.hpp"
#include "nccube/sdpfeas.hpp"

using namespace nccube;

namespace {

HermitianMatrix scalar(double x) { return HermitianMatrix::diagonal({x}); }

AffineBlock scalarBlock(double constant, const std::vector<double>& coeffs) {
    AffineBlock b;
    b.constant = scalar(constant);
    for (double c : coeffs) b.coeff.push_back(scalar(c));
    return b;
}

// Dense-grid oracle for 1- and 2-dimensional problems: the max-min margin
// over a box, with a second refinement stage around the best cell.
double gridStage(const AffinePSDProblem& p, std::vector<double>& bestPoint, const std::vector<double>& centre,
                 double radius, int points) {
    const int d = p.freeDim();
    double best = -1e300;
    std::vector<double> v(static_cast<size_t>(d));
    const int jmax = d == 2 ? points : 0;
    for (int i = 0; i <= points; ++i) {
        v[0] = centre[0] - radius + 2.0 * radius * i / points;
        for (int j = 0; j <= jmax; ++j) {
            if (d == 2) v[1] = centre[1] - radius + 2.0 * radius * j / points;
            const double m = p.checkPoint(v);
            if (m > best) {
                best = m;
                bestPoint = v;
            }
        }
    }
    return best;
}

double gridOracle(const AffinePSDProblem& p) {
    std::vector<double> bp(static_cast<size_t>(p.freeDim()), 0.0);
    std::vector<double> centre = bp;
    gridStage(p, bp, centre, 30.0, 120);
    centre = bp;
    gridStage(p, bp, centre, 0.6, 120);
    centre = bp;
    return gridStage(p, bp, centre, 0.012, 120);
}

}  // namespace

TEST_CASE("constant blocks decide immediately") {
    SUBCASE("positive constant") {
        AffinePSDProblem p(0);
        AffineBlock b;
        b.constant = scalar(5.0);
        p.addBlock(b);
        const FeasResult r = solveMaxMargin(p);
        CHECK(r.status == FeasStatus::Feasible);
        CHECK(r.margin == doctest::Approx(5.0));
    }
    SUBCASE("negative constant") {
        AffinePSDProblem p(0);
        AffineBlock b;
        b.constant = scalar(-1.0);
        p.addBlock(b);
        const FeasResult r = solveMaxMargin(p);
        CHECK(r.status == FeasStatus::Infeasible);
        CHECK(r.margin == doctest::Approx(-1.0));
    }
}

TEST_CASE("maximin of {v, 1-v} is 1/2 at v = 1/2") {
    AffinePSDProblem p(1);
    p.addBlock(scalarBlock(0.0, {1.0}));
    p.addBlock(scalarBlock(1.0, {-1.0}));
    const FeasResult r = solveMaxMargin(p);
    REQUIRE(r.status == FeasStatus::Feasible);
    CHECK(r.margin == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(r.point[0] == doctest::Approx(0.5).epsilon(1e-2));
    CHECK(p.checkPoint(r.point) == doctest::Approx(r.margin).epsilon(1e-10));
}

TEST_CASE("checkPoint conventions") {
    AffinePSDProblem empty(0);
    CHECK(std::isinf(empty.checkPoint({})));

    AffinePSDProblem p(1);
    p.addBlock(scalarBlock(0.0, {1.0}));
    p.addBlock(scalarBlock(1.0, {-1.0}));
    CHECK(p.checkPoint({0.0}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(p.checkPoint({0.0, 1.0}), InvalidInput);
}

TEST_CASE("infeasible linear system is detected with located margin") {
    // v >= eps and -v - 1 >= eps cannot both hold; best margin is -1/2.
    AffinePSDProblem p(1);
    p.addBlock(scalarBlock(0.0, {1.0}));
    p.addBlock(scalarBlock(-1.0, {-1.0}));
    const FeasResult r = solveMaxMargin(p);
    CHECK(r.status == FeasStatus::Infeasible);
    CHECK(r.margin == doctest::Approx(-0.5).epsilon(2e-3));
}

TEST_CASE("agreement with dense grid oracle on small random problems") {
    Rng rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 1 + trial % 2;
        AffinePSDProblem p(d);
        const int nb = 2 + rng.uniformInt(2);
        for (int j = 0; j < nb; ++j) {
            AffineBlock b;
            const int sz = 1 + rng.uniformInt(2);
            b.constant = rng.gaussianHermitian(sz);
            for (int t = 0; t < d; ++t) b.coeff.push_back(rng.gaussianHermitian(sz));
            p.addBlock(b);
        }
        const FeasResult r = solveMaxMargin(p);
        // The engine bisects inside [-scale, scale], so its reported margin
        // is the true optimum clamped to that interval.
        const double expected = std::min(gridOracle(p), p.scale());
        if (r.status == FeasStatus::Feasible || r.status == FeasStatus::Infeasible)
            CHECK(r.margin == doctest::Approx(expected).epsilon(0.02).scale(1.0));
    }
}

TEST_CASE("adding a block never increases the optimal margin") {
    Rng rng(33);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = 2;
        AffinePSDProblem p(d);
        for (int j = 0; j < 2; ++j) {
            AffineBlock b;
            b.constant = rng.gaussianHermitian(2);
            for (int t = 0; t < d; ++t) b.coeff.push_back(rng.gaussianHermitian(2));
            p.addBlock(b);
        }
        AffinePSDProblem q = p;
        AffineBlock extra;
        extra.constant = rng.gaussianHermitian(2);
        for (int t = 0; t < d; ++t) extra.coeff.push_back(rng.gaussianHermitian(2));
        q.addBlock(extra);
        const FeasResult rp = solveMaxMargin(p);
        const FeasResult rq = solveMaxMargin(q);
        CHECK(rq.margin <= rp.margin + 2e-3);
    }
}

TEST_CASE("scale equivariance of decision and margin") {
    Rng rng(44);
    for (double lambda : {0.1, 10.0}) {
        for (int trial = 0; trial < 4; ++trial) {
            AffinePSDProblem p(1), q(1);
            for (int j = 0; j < 2; ++j) {
                AffineBlock b;
                b.constant = rng.gaussianHermitian(2);
                b.coeff.push_back(rng.gaussianHermitian(2));
                AffineBlock bs;
                bs.constant = b.constant;
                bs.constant *= lambda;
                HermitianMatrix f = b.coeff[0];
                f *= lambda;
                bs.coeff.push_back(f);
                p.addBlock(b);
                q.addBlock(bs);
            }
            const FeasResult rp = solveMaxMargin(p);
            const FeasResult rq = solveMaxMargin(q);
            CHECK(rp.status == rq.status);
            if (rp.status != FeasStatus::Undecided)
                CHECK(rq.margin == doctest::Approx(lambda * rp.margin).epsilon(5e-2).scale(std::abs(lambda * rp.margin) + 1e-2));
        }
    }
}

TEST_CASE("feasible results are re-verified by checkPoint") {
    Rng rng(55);
    for (int trial = 0; trial < 6; ++trial) {
        AffinePSDProblem p(3);
        for (int j = 0; j < 3; ++j) {
            AffineBlock b;
            HermitianMatrix c = rng.gaussianHermitian(3);
            c.addIdentity(3.0);  // bias towards feasibility
            b.constant = c;
            for (int t = 0; t < 3; ++t) b.coeff.push_back(rng.gaussianHermitian(3));
            p.addBlock(b);
        }
        const FeasResult r = solveMaxMargin(p);
        if (r.status == FeasStatus::Feasible) {
            CHECK(p.checkPoint(r.point) >= r.margin - 1e-8);
            CHECK(r.margin > 1e-6);
        }
    }
}

TEST_CASE("determinism: identical seeds give identical results") {
    Rng rng(66);
    AffinePSDProblem p(2);
    for (int j = 0; j < 2; ++j) {
        AffineBlock b;
        b.constant = rng.gaussianHermitian(2);
        for (int t = 0; t < 2; ++t) b.coeff.push_back(rng.gaussianHermitian(2));
        p.addBlock(b);
    }
    SolveOptions o;
    o.seed = 17;
    const FeasResult a = solveMaxMargin(p, o);
    const FeasResult b = solveMaxMargin(p, o);
    CHECK(a.status == b.status);
    CHECK(a.margin == b.margin);
    CHECK(a.point == b.point);
}
