#pragma once

#include <array>

#include "nccube/quotient_maps.hpp"

namespace nccube {

struct MaxOptions {
    double strictTol = 1e-6;
    long maxIter = 200000;
    uint64_t seed = 0;
    bool locateInfeasibleMargin = true;
    double marginResolution = 1e-5;
    bool decisionOnly = false;
    int probeWindow = 400;
};

struct MaxConeResult {
    MaxRoute route;
    FeasResult feas;
    std::vector<HermitianMatrix> certificateBlocks;  // populated when feasible
    TensorElement lifting;                           // scaled preimage, when feasible

    bool feasible() const { return feas.status == FeasStatus::Feasible; }
};

/// Strong max-cone membership of a Hermitian NC(n) (x) M_k element along one
/// lifting route; Feasible iff strongly positive (up to strictTol), with the
/// lifting as certificate.
MaxConeResult maxMembership(const TensorElement& x, MaxRoute route, const MaxOptions& opts = {});

struct RouteReport {
    std::array<MaxConeResult, 4> results;  // tridiag, arrow, diagonal, qn
    bool contradiction = false;

    const MaxConeResult& byRoute(MaxRoute r) const;
};

/// All four routes plus the defect flag: a Feasible/Infeasible pair whose
/// margins both exceed 10 * strictTol in absolute value is a contradiction.
RouteReport crossValidateRoutes(const TensorElement& x, const MaxOptions& opts = {});

struct RandomMaxPositiveInstance {
    TensorElement element;  // strongly max-positive by construction
    TensorElement lifting;  // strictly positive block-tridiagonal preimage
};

/// Pushforward of a random strictly positive block-tridiagonal matrix
/// (shifted to minimum eigenvalue 0.1) through the tridiagonal quotient map.
RandomMaxPositiveInstance randomMaxPositive(int n, int k, uint64_t seed);

/// Unconstrained random Hermitian NC element; the unit coefficient gets an
/// extra shift drawn from [-0.5, 1.5] so both cone sides appear.
TensorElement randomNCElement(int n, int k, uint64_t seed);

}  // namespace nccube
