#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nccube/matrix.hpp"

namespace nccube {

/// One PSD constraint of an affine family: v -> constant + sum_t v[t] * coeff[t].
struct AffineBlock {
    HermitianMatrix constant;
    std::vector<HermitianMatrix> coeff;  // one Hermitian matrix per free coordinate

    int size() const { return constant.dim(); }
    HermitianMatrix evaluate(const std::vector<double>& v) const;
};

/// Affine parameterisation of candidate liftings together with the list of
/// blocks required positive semidefinite.
class AffinePSDProblem {
public:
    AffinePSDProblem() : freeDim_(0), scale_(1.0) {}
    explicit AffinePSDProblem(int freeDim) : freeDim_(freeDim), scale_(1.0) {}

    void addBlock(AffineBlock block);

    int freeDim() const { return freeDim_; }
    const std::vector<AffineBlock>& blocks() const { return blocks_; }
    double scale() const { return scale_; }

    /// min over blocks of minEig(block(v)); +inf when there are no blocks.
    double checkPoint(const std::vector<double>& v) const;

private:
    int freeDim_;
    std::vector<AffineBlock> blocks_;
    double scale_;  // 1 + max block norm of the constant terms
};

enum class FeasStatus { Feasible, Infeasible, Undecided };

struct FeasResult {
    FeasStatus status = FeasStatus::Undecided;
    double margin = -std::numeric_limits<double>::infinity();  // certified at `point`
    std::vector<double> point;                                 // best free vector found
    long iterations = 0;
    double residual = 0.0;  // final affine-to-cone gap (normalised units)

    bool feasible() const { return status == FeasStatus::Feasible; }
};

struct SolveOptions {
    double strictTol = 1e-6;
    long maxIter = 200000;     // total inner-iteration budget
    uint64_t seed = 0;
    bool locateInfeasibleMargin = true;  // bisect below zero so `margin` estimates how far
    double marginResolution = 1e-5;      // bisection width cutoff
    bool decisionOnly = false;           // stop once the tri-state verdict is certified
    int probeWindow = 400;               // plateau window for the bisection probes
};

/// Maximise the strong-positivity margin of the block family over the affine
/// parameterisation: bisection on the margin around Dykstra alternating
/// projections between the affine set and the product of shifted PSD cones.
/// Feasible results carry a point re-verified by checkPoint; Infeasible is
/// declared only when the relaxed floor margin -strictTol is itself rejected
/// by the stall criterion.
FeasResult solveMaxMargin(const AffinePSDProblem& p, const SolveOptions& opts = {});

}  // namespace nccube
