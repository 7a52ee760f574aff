#pragma once

#include "nccube/matrix.hpp"

namespace nccube {

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns; unitary
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// sweeps. Off-diagonal Frobenius tolerance 1e-13 * ||M||_F, at most 60
/// sweeps; throws NumericalFailure if that cap is hit.
EighResult eigh(const HermitianMatrix& m);

/// Allocation-free variant for hot loops; buffers are resized on first use.
void eighInto(const HermitianMatrix& m, std::vector<double>& eigenvalues, ComplexMatrix& eigenvectors);

double minEig(const HermitianMatrix& m);
double maxEig(const HermitianMatrix& m);

/// Nearest PSD matrix in Frobenius norm (eigenvalue clipping at zero).
HermitianMatrix psdProject(const HermitianMatrix& m);

/// Eigenvalue clipping at a general floor; used by the shifted-cone
/// projections of the feasibility engine.
HermitianMatrix eigenFloorProject(const HermitianMatrix& m, double floor);

/// Largest singular value.
double opNorm(const ComplexMatrix& a);

/// Numerical radius max_theta lambda_max((e^{i theta} A + e^{-i theta} A†)/2),
/// coarse grid then golden-section refinement of the best bracket.
double numericalRadius(const ComplexMatrix& a, int grid = 720, double refineTol = 1e-9);

/// M^{-1/2}; requires minEig(M) > floor > 0, else throws InvalidInput.
HermitianMatrix invSqrt(const HermitianMatrix& m, double floor);

/// Unitary exp(i s H) for Hermitian H (every anti-Hermitian is i H).
ComplexMatrix unitaryExp(const HermitianMatrix& h, double s);

}  // namespace nccube
