#include "nccube/wepchecks.hpp"

#include <cmath>

#include "nccube/hermlin.hpp"
#include "nccube/rng.hpp"
#include "nccube/riesz.hpp"

namespace nccube {

namespace {

// [[D + Z, 2A],[2A*, D - Z]] as an affine block over the coordinates of D
// and Z (free Hermitian k x k each), with D possibly entering through an
// affine substitution handled by the caller via sign and constant.
void placeCorner(ComplexMatrix& big, const ComplexMatrix& a, int k) {
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            big(p, k + q) = 2.0 * a(p, q);
            big(k + q, p) = 2.0 * std::conj(a(p, q));
        }
}

}  // namespace

RadiusSplitResult radiusSplitDecompose(const HermitianMatrix& a0, const ComplexMatrix& a1, const ComplexMatrix& a2,
                                       double strictTol, uint64_t seed) {
    const int k = a0.dim();
    if (a1.rows() != k || a1.cols() != k || a2.rows() != k || a2.cols() != k)
        throw InvalidInput("radiusSplitDecompose: coefficient size mismatch");

    const auto& hermON = SubalgebraSpec::fullCached(k).hermitianBasis();
    const int kk = static_cast<int>(hermON.size());
    const int d = 3 * kk;  // B, Z1, Z2
    AffinePSDProblem p(d);

    // block 1: [[B + Z1, 2A1],[2A1*, B - Z1]]
    {
        AffineBlock blk;
        ComplexMatrix c(2 * k, 2 * k);
        placeCorner(c, a1, k);
        blk.constant = HermitianMatrix(c);
        for (int var = 0; var < 3; ++var)
            for (int t = 0; t < kk; ++t) {
                ComplexMatrix f(2 * k, 2 * k);
                if (var == 0) {  // B
                    for (int pp = 0; pp < k; ++pp)
                        for (int qq = 0; qq < k; ++qq) {
                            f(pp, qq) = hermON[static_cast<size_t>(t)](pp, qq);
                            f(k + pp, k + qq) = hermON[static_cast<size_t>(t)](pp, qq);
                        }
                } else if (var == 1) {  // Z1
                    for (int pp = 0; pp < k; ++pp)
                        for (int qq = 0; qq < k; ++qq) {
                            f(pp, qq) = hermON[static_cast<size_t>(t)](pp, qq);
                            f(k + pp, k + qq) = -hermON[static_cast<size_t>(t)](pp, qq);
                        }
                }
                blk.coeff.emplace_back(f);
            }
        p.addBlock(std::move(blk));
    }
    // block 2: [[C + Z2, 2A2],[2A2*, C - Z2]] with C = 2A0 - B
    {
        AffineBlock blk;
        ComplexMatrix c(2 * k, 2 * k);
        placeCorner(c, a2, k);
        for (int pp = 0; pp < k; ++pp)
            for (int qq = 0; qq < k; ++qq) {
                c(pp, qq) += 2.0 * a0(pp, qq);
                c(k + pp, k + qq) += 2.0 * a0(pp, qq);
            }
        blk.constant = HermitianMatrix(c);
        for (int var = 0; var < 3; ++var)
            for (int t = 0; t < kk; ++t) {
                ComplexMatrix f(2 * k, 2 * k);
                if (var == 0) {  // B enters C with a minus sign
                    for (int pp = 0; pp < k; ++pp)
                        for (int qq = 0; qq < k; ++qq) {
                            f(pp, qq) = -hermON[static_cast<size_t>(t)](pp, qq);
                            f(k + pp, k + qq) = -hermON[static_cast<size_t>(t)](pp, qq);
                        }
                } else if (var == 2) {  // Z2
                    for (int pp = 0; pp < k; ++pp)
                        for (int qq = 0; qq < k; ++qq) {
                            f(pp, qq) = hermON[static_cast<size_t>(t)](pp, qq);
                            f(k + pp, k + qq) = -hermON[static_cast<size_t>(t)](pp, qq);
                        }
                }
                blk.coeff.emplace_back(f);
            }
        p.addBlock(std::move(blk));
    }

    SolveOptions opts;
    opts.strictTol = strictTol;
    opts.seed = seed;
    RadiusSplitResult out;
    out.feas = solveMaxMargin(p, opts);

    // strictness threshold delta = strictTol * (1 + ||A0||)
    const double delta = strictTol * (1.0 + opNorm(a0.mat()));
    if (out.feas.status == FeasStatus::Feasible && out.feas.margin > delta) {
        const auto assemble = [&](int var) {
            HermitianMatrix m = HermitianMatrix::zero(k);
            for (int t = 0; t < kk; ++t) m.addScaled(out.feas.point[static_cast<size_t>(var * kk + t)], hermON[static_cast<size_t>(t)]);
            return m;
        };
        out.b = assemble(0);
        HermitianMatrix c = a0;
        c *= 2.0;
        c -= *out.b;
        out.c = c;
        out.z1 = assemble(1);
        out.z2 = assemble(2);
    }
    return out;
}

namespace {

// The dilation block equals bound*I - G(Z) for an affine G, so the engine's
// maximal margin over Z is exactly bound - w(M); one margin solve locates
// the radius without an outer search.
AffinePSDProblem dilationProblem(const ComplexMatrix& m, double bound) {
    const int k = m.rows();
    const auto& hermON = SubalgebraSpec::fullCached(k).hermitianBasis();
    const int kk = static_cast<int>(hermON.size());
    AffinePSDProblem p(kk);
    AffineBlock blk;
    ComplexMatrix c(2 * k, 2 * k);
    for (int pp = 0; pp < k; ++pp) {
        c(pp, pp) = bound;
        c(k + pp, k + pp) = bound;
        for (int qq = 0; qq < k; ++qq) {
            c(pp, k + qq) = m(pp, qq);
            c(k + qq, pp) = std::conj(m(pp, qq));
        }
    }
    blk.constant = HermitianMatrix(c);
    for (int t = 0; t < kk; ++t) {
        ComplexMatrix f(2 * k, 2 * k);
        for (int pp = 0; pp < k; ++pp)
            for (int qq = 0; qq < k; ++qq) {
                f(pp, qq) = hermON[static_cast<size_t>(t)](pp, qq);
                f(k + pp, k + qq) = -hermON[static_cast<size_t>(t)](pp, qq);
            }
        blk.coeff.emplace_back(f);
    }
    p.addBlock(std::move(blk));
    return p;
}

}  // namespace

bool radiusBelowLMI(const ComplexMatrix& m, double bound, double strictTol, uint64_t seed) {
    if (!m.isSquare()) throw InvalidInput("radiusBelowLMI needs a square matrix");
    if (bound <= 0) return false;
    SolveOptions opts;
    opts.strictTol = strictTol;
    opts.seed = seed;
    opts.locateInfeasibleMargin = false;
    return solveMaxMargin(dilationProblem(m, bound), opts).status == FeasStatus::Feasible;
}

double radiusByLMIBisection(const ComplexMatrix& m, double width) {
    const double nrm = opNorm(m);
    if (nrm == 0.0) return 0.0;
    SolveOptions opts;
    opts.marginResolution = std::min(width, 1e-9);
    opts.maxIter = 2000000;
    const FeasResult r = solveMaxMargin(dilationProblem(m, nrm), opts);
    return nrm - r.margin;
}

S2InstanceCheck s2CheckInstance(const ComplexMatrix& a1, const ComplexMatrix& a2, const MinSearchOptions& searchOpts,
                                double decisive) {
    const int k = a1.rows();
    TensorElement x = TensorElement::zero({SystemKind::UnitaryGen, 2}, k);
    x.setCoeff("1", ComplexMatrix::identity(k));
    x.setCoeff("u1", a1);
    x.setCoeff("u2", a2);
    MinSearchOptions so = searchOpts;
    so.stopAtViolation = false;
    const MinSearchResult sr = s2MinSearch(x, so);
    // The split criterion and the representation search describe the same
    // positivity statement only after matching the coproduct normalisation:
    // the element 1 (x) I + sum u_i (x) A_i + h.c. corresponds to the split
    // of the doubled coefficients (scalar ground truth: positivity iff
    // |a1| + |a2| < 1/2, split with radii < 1/2 exists iff sum < 1).
    const RadiusSplitResult dr =
        radiusSplitDecompose(HermitianMatrix::identity(k), a1 * Complex(2, 0), a2 * Complex(2, 0));

    S2InstanceCheck out;
    out.minSearchValue = sr.bestValue;
    out.violationFound = sr.bestValue < -1e-7;
    out.decompositionFound = dr.found();
    out.decompositionMargin = dr.feas.margin;
    // Both sides produce certificates: a violating representation and a
    // decomposition each pin the truth, so only their joint occurrence is a
    // defect; a decisively infeasible decomposition with no violation found
    // is a search shortfall, not a contradiction.
    const bool violationDecisive = sr.bestValue < -decisive;
    const bool foundDecisive = dr.found() && dr.feas.margin > decisive;
    out.contradiction = violationDecisive && foundDecisive;
    return out;
}

S2AgreementReport s2Agreement(int k, int trials, uint64_t seed, const MinSearchOptions& searchOpts) {
    S2AgreementReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::derived(seed, static_cast<uint64_t>(t));
        const double scale = 0.1 + 0.5 * rng.uniform();
        ComplexMatrix a1 = rng.gaussianMatrix(k, k);
        a1 *= Complex(scale / std::sqrt(static_cast<double>(k)), 0);
        ComplexMatrix a2 = rng.gaussianMatrix(k, k);
        a2 *= Complex(scale / std::sqrt(static_cast<double>(k)), 0);
        MinSearchOptions so = searchOpts;
        so.seed = seed + static_cast<uint64_t>(t) * 977;
        const S2InstanceCheck c = s2CheckInstance(a1, a2, so);
        if (c.contradiction) ++rep.contradictions;
        if (c.decompositionFound && !c.violationFound) ++rep.bothPositive;
        if (!c.decompositionFound && c.violationFound) ++rep.bothNegative;
        if (!c.decompositionFound && !c.violationFound) ++rep.searchShortfalls;
    }
    return rep;
}

}  // namespace nccube
