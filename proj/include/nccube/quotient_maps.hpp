#pragma once

#include <vector>

#include "nccube/opsys.hpp"
#include "nccube/sdpfeas.hpp"

namespace nccube {

enum class MapName { Phi, Psi, Rho, Gamma, PsiGamma, Theta, Beta, CoproductIota };

/// phi: T_{n+1} -> S_n; psi: S_n -> NC(n); rho = psi.phi: T_{n+1} -> NC(n);
/// gamma: R_{n+1} -> S_n; psiGamma = psi.gamma; theta: C^{2n} -> NC(n);
/// beta: M_{n+1} -> W_n; coproductIota(slot): C^2 -> C^{2n} representative.
struct QuotientMapId {
    MapName name;
    int n;
    int iotaSlot = 1;  // only for CoproductIota

    SystemId domain() const;
    SystemId codomain() const;
};

/// Blockwise linear image with the catalog coefficients; integer
/// accumulation happens before the single rational scaling, so kernel
/// vectors are annihilated exactly.
TensorElement applyMap(const QuotientMapId& id, const TensorElement& x);

/// Kernel of the map as a catalog subspace (not defined for coproductIota).
KernelSubspace kernelOf(const QuotientMapId& id);

/// The second cube-quotient realisation: dyadically weighted coordinates
/// with kernel Q_n. tauQn(e_{2k-1}) = alpha_k p_k-style with
/// alpha_1 = 2^{1-n}, alpha_k = 2^{k-n-1}; exact on Q_n.
TensorElement applyTauQn(const TensorElement& x);
double tauQnWeight(int n, int pairIndex);  // alpha_k, pairIndex 1..n

/// Representative of the coproduct embedding of the slot-m copy of C^2:
/// s |-> (0,...,n s,...,0).
TensorElement coproductEmbed(int slot, int n, const ComplexMatrix& s1, const ComplexMatrix& s2, int k);

enum class MaxRoute { Tridiag, Arrow, Diagonal, Qn };

MaxRoute maxRouteFromString(const std::string& s);
std::string maxRouteToString(MaxRoute r);

/// A lifting parameterisation: the engine problem plus enough structure to
/// reassemble certificates and push liftings back down.
struct LiftProblem {
    MaxRoute route;
    int n = 0, k = 0;
    AffinePSDProblem problem;
    SystemId domainSystem;
    TensorElement target;

    /// Lifted element of the domain system at the free vector (scaled so the
    /// quotient map sends it exactly to the target).
    TensorElement lifting(const std::vector<double>& v) const;
    /// The PSD certificate blocks at the free vector.
    std::vector<HermitianMatrix> blockMatrices(const std::vector<double>& v) const;
    /// Push a domain element through this route's quotient map.
    TensorElement pushforward(const TensorElement& lifted) const;
};

/// Affine family of liftings of a Hermitian NC(n) (x) M_k element along the
/// tridiagonal, arrow or diagonal route.
LiftProblem liftParameterisation(MaxRoute route, const TensorElement& target);

/// Same through the Q_n realisation (the fourth, independent route).
LiftProblem qnRoute(const TensorElement& target);

}  // namespace nccube
