#pragma once

#include <optional>

#include "nccube/mincone.hpp"
#include "nccube/sdpfeas.hpp"

namespace nccube {

struct RadiusSplitResult {
    FeasResult feas;
    std::optional<HermitianMatrix> b, c, z1, z2;

    bool found() const { return b.has_value(); }
};

/// Split A0 = (B + C)/2 with B, C strongly positive and both weighted
/// numerical radii w(B^{-1/2} A1 B^{-1/2}), w(C^{-1/2} A2 C^{-1/2}) below
/// 1/2, phrased as the affine feasibility of the two dilation blocks
/// [[B + Z, 2A],[2A*, B - Z]] over free Hermitian B, Z1, Z2.
RadiusSplitResult radiusSplitDecompose(const HermitianMatrix& a0, const ComplexMatrix& a1, const ComplexMatrix& a2,
                                       double strictTol = 1e-6, uint64_t seed = 0);

/// Decides w(M) < bound through the same dilation: exists Hermitian Z with
/// [[bound I + Z, M],[M*, bound I - Z]] strictly positive.
bool radiusBelowLMI(const ComplexMatrix& m, double bound, double strictTol = 1e-8, uint64_t seed = 0);

/// Locate w(M) by bisecting radiusBelowLMI to the given width.
double radiusByLMIBisection(const ComplexMatrix& m, double width = 1e-7);

struct S2InstanceCheck {
    double minSearchValue;   // most negative eigenvalue the search found
    bool violationFound;     // value < -1e-7
    bool decompositionFound; // radiusSplitDecompose(I, A1, A2) succeeded
    double decompositionMargin;
    bool contradiction;      // both sides decisive and inconsistent
};

S2InstanceCheck s2CheckInstance(const ComplexMatrix& a1, const ComplexMatrix& a2, const MinSearchOptions& searchOpts = {},
                                double decisive = 1e-3);

struct S2AgreementReport {
    int trials = 0;
    int bothPositive = 0;       // decomposition found, no violation
    int bothNegative = 0;       // violation found, no decomposition
    int searchShortfalls = 0;   // no decomposition but no violation found either
    int contradictions = 0;
};

/// Random-instance comparison of the unitary-pair search against the
/// decomposition criterion at unit A0.
S2AgreementReport s2Agreement(int k, int trials, uint64_t seed, const MinSearchOptions& searchOpts = {});

}  // namespace nccube
