#pragma once

#include <cstdint>

#include "nccube/opsys.hpp"

namespace nccube {

/// A finite-dimensional representation point: n Hermitian contractions
/// (NC case) or n unitaries (unitary-generator case), all d x d.
struct RepTuple {
    int d = 1;
    bool unitary = false;
    std::vector<ComplexMatrix> mats;
};

struct MinSearchResult {
    bool violation = false;
    double bestValue = 0.0;  // most negative eigenvalue found over all reps tried
    RepTuple rep;            // attains bestValue

    bool noViolationFound() const { return !violation; }
};

struct MinSearchOptions {
    int dMax = 6;
    int restarts = 32;
    uint64_t seed = 0;
    int gradientSteps = 40;
    bool stopAtViolation = true;
    double violationTol = 1e-7;
};

/// Evaluate min eigenvalue of A_0 (x) I_d + sum A_i (x) H_i.
double evalNCRep(const TensorElement& x, const RepTuple& rep);
/// Evaluate for an S_2-style element: A_0 (x) I + sum (A_i (x) U_i + h.c.).
double evalS2Rep(const TensorElement& x, const RepTuple& rep);

/// Adversarial search for Hermitian contraction tuples making the element
/// non-positive: exhaustive sign tuples and the commuting grid first, then
/// projected-gradient descent restarts for each dimension up to dMax.
MinSearchResult minViolationSearch(const TensorElement& x, const MinSearchOptions& opts = {});

/// Same over unitary pairs for Hermitian S_2 (x) M_k elements, with the
/// unitaries retracted along anti-Hermitian exponentials.
MinSearchResult s2MinSearch(const TensorElement& x, const MinSearchOptions& opts = {});

/// Lower bound on the joint numerical radius of (A_1, A_2): half the largest
/// value of -lambda_min(sum A_i (x) U_i + h.c.) over the unitary tuples the
/// search visits. Non-decreasing in dMax and restarts.
double jointNumericalRadiusLB(const ComplexMatrix& a1, const ComplexMatrix& a2, const MinSearchOptions& opts = {});

}  // namespace nccube
