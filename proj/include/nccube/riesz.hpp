#pragma once

#include <optional>
#include <vector>

#include "nccube/matrix.hpp"
#include "nccube/sdpfeas.hpp"

namespace nccube {

/// Tuple (a1, a2, b_1..b_m, x_1..x_m) with the scheme inequalities at
/// margin delta: a1 - sum x_i, a2 - sum x_i, x_i - b_i and x_i all >= delta.
struct RieszScheme {
    HermitianMatrix a1, a2;
    std::vector<HermitianMatrix> b;
    std::vector<HermitianMatrix> x;
    double margin = 0.0;
};

struct SchemeCheck {
    bool valid;
    double worstSlack;  // min over the 2 + 2m inequalities of minEig - margin
};

SchemeCheck verifyScheme(const RieszScheme& s);

/// A unital *-closed, product-closed subspace of M_k, with an orthonormal
/// basis of its Hermitian part for use as engine coordinates.
class SubalgebraSpec {
public:
    static SubalgebraSpec full(int k);
    /// Shared immutable instance of full(k); the closure verification is
    /// quadratic in k^2, so callers on hot paths use this.
    static const SubalgebraSpec& fullCached(int k);
    static SubalgebraSpec scalars(int k);
    static SubalgebraSpec diagonal(int k);
    static SubalgebraSpec blockDiagonal(const std::vector<int>& blockSizes);
    /// Real span of the permutation matrices of the group generated by the
    /// given permutations of {0..k-1}.
    static SubalgebraSpec permutationSpan(int k, const std::vector<std::vector<int>>& generators);

    int k() const { return k_; }
    int hermDim() const { return static_cast<int>(hermBasis_.size()); }
    const std::vector<HermitianMatrix>& hermitianBasis() const { return hermBasis_; }

    HermitianMatrix projectHermitian(const HermitianMatrix& x) const;
    bool containsHermitian(const HermitianMatrix& x, double tol = 1e-10) const;
    HermitianMatrix assemble(const std::vector<double>& coords, size_t offset = 0) const;

private:
    SubalgebraSpec(int k, std::vector<ComplexMatrix> basis);

    int k_;
    std::vector<ComplexMatrix> basis_;
    std::vector<HermitianMatrix> hermBasis_;
};

/// The affine feasibility problem behind both the scheme solver and the
/// diagonal lifting route: free x_i over the given Hermitian coordinate
/// basis, blocks [a1 - sum x, a2 - sum x, x_1 - b_1, x_1, ..., x_m - b_m, x_m].
AffinePSDProblem buildSchemeProblem(const HermitianMatrix& a1, const HermitianMatrix& a2,
                                    const std::vector<HermitianMatrix>& b,
                                    const std::vector<HermitianMatrix>& coordBasis);

struct SchemeSolveResult {
    FeasResult feas;
    std::optional<RieszScheme> scheme;  // present iff feasible

    bool found() const { return scheme.has_value(); }
};

/// Search x_i in the subalgebra completing (a1, a2, b_1..b_m) to a scheme.
SchemeSolveResult solveScheme(const HermitianMatrix& a1, const HermitianMatrix& a2,
                              const std::vector<HermitianMatrix>& b, const SubalgebraSpec& algebra,
                              double strictTol = 1e-6, uint64_t seed = 0);

struct InterpolationResult {
    FeasResult feas;
    std::optional<HermitianMatrix> y;

    bool found() const { return y.has_value(); }
};

/// Tight interpolation: y in the subalgebra with a_i >> y >> b_j. The
/// bounds themselves may sit outside the subalgebra; only the separator is
/// constrained.
InterpolationResult trInterpolate(const std::vector<HermitianMatrix>& aList, const std::vector<HermitianMatrix>& bList,
                                  const SubalgebraSpec& algebra, double strictTol = 1e-6, uint64_t seed = 0);

}  // namespace nccube
