#include "nccube/maxcone.hpp"

#include "nccube/hermlin.hpp"
#include "nccube/rng.hpp"

namespace nccube {

MaxConeResult maxMembership(const TensorElement& x, MaxRoute route, const MaxOptions& opts) {
    LiftProblem lp = liftParameterisation(route, x);
    SolveOptions so;
    so.strictTol = opts.strictTol;
    so.maxIter = opts.maxIter;
    so.seed = opts.seed;
    so.locateInfeasibleMargin = opts.locateInfeasibleMargin;
    so.marginResolution = opts.marginResolution;
    so.decisionOnly = opts.decisionOnly;
    so.probeWindow = opts.probeWindow;

    MaxConeResult out;
    out.route = route;
    out.feas = solveMaxMargin(lp.problem, so);
    if (out.feas.status == FeasStatus::Feasible) {
        out.certificateBlocks = lp.blockMatrices(out.feas.point);
        out.lifting = lp.lifting(out.feas.point);
    }
    return out;
}

const MaxConeResult& RouteReport::byRoute(MaxRoute r) const {
    for (const auto& res : results)
        if (res.route == r) return res;
    throw InvalidInput("route missing from report");
}

RouteReport crossValidateRoutes(const TensorElement& x, const MaxOptions& opts) {
    RouteReport rep{{maxMembership(x, MaxRoute::Tridiag, opts), maxMembership(x, MaxRoute::Arrow, opts),
                     maxMembership(x, MaxRoute::Diagonal, opts), maxMembership(x, MaxRoute::Qn, opts)},
                    false};
    const double decisive = 10.0 * opts.strictTol;
    bool feasibleStrong = false, infeasibleStrong = false;
    for (const auto& r : rep.results) {
        if (r.feas.status == FeasStatus::Feasible && r.feas.margin > decisive) feasibleStrong = true;
        if (r.feas.status == FeasStatus::Infeasible && r.feas.margin < -decisive) infeasibleStrong = true;
    }
    rep.contradiction = feasibleStrong && infeasibleStrong;
    return rep;
}

RandomMaxPositiveInstance randomMaxPositive(int n, int k, uint64_t seed) {
    Rng rng = Rng::derived(seed, 0x6d617870);
    std::vector<HermitianMatrix> diag;
    std::vector<ComplexMatrix> off;
    for (int i = 0; i <= n; ++i) diag.push_back(rng.gaussianHermitian(k));
    for (int i = 0; i < n; ++i) {
        ComplexMatrix x = rng.gaussianMatrix(k, k);
        x *= Complex(0.5, 0);
        off.push_back(std::move(x));
    }

    const int bign = (n + 1) * k;
    ComplexMatrix big(bign, bign);
    for (int i = 0; i <= n; ++i)
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) big(i * k + p, i * k + q) = diag[static_cast<size_t>(i)](p, q);
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) {
                big(i * k + p, (i + 1) * k + q) = off[static_cast<size_t>(i)](p, q);
                big((i + 1) * k + q, i * k + p) = std::conj(off[static_cast<size_t>(i)](p, q));
            }
    const double shift = 0.1 - minEig(HermitianMatrix(big));
    for (auto& d : diag) d.addIdentity(shift);

    RandomMaxPositiveInstance out;
    out.lifting = TensorElement::zero({SystemKind::Tridiagonal, n}, k);
    for (int i = 0; i <= n; ++i)
        out.lifting.setCoeff("E_" + std::to_string(i + 1) + "_" + std::to_string(i + 1), diag[static_cast<size_t>(i)].mat());
    for (int i = 0; i < n; ++i) {
        out.lifting.setCoeff("E_" + std::to_string(i + 1) + "_" + std::to_string(i + 2), off[static_cast<size_t>(i)]);
        out.lifting.setCoeff("E_" + std::to_string(i + 2) + "_" + std::to_string(i + 1), off[static_cast<size_t>(i)].adjoint());
    }
    out.element = applyMap({MapName::Rho, n}, out.lifting);
    return out;
}

TensorElement randomNCElement(int n, int k, uint64_t seed) {
    Rng rng = Rng::derived(seed, 0x656c656d);
    std::vector<HermitianMatrix> a;
    for (int i = 0; i < n; ++i) {
        HermitianMatrix h = rng.gaussianHermitian(k);
        h *= 0.45;
        a.push_back(std::move(h));
    }
    HermitianMatrix a0 = rng.gaussianHermitian(k);
    a0 *= 0.3;
    double lift = 0;
    for (const auto& h : a) lift += opNorm(h.mat());
    a0.addIdentity(lift * (rng.uniform() * 1.6 - 0.3));
    return TensorElement::ncElement(n, k, a0, a);
}

}  // namespace nccube
