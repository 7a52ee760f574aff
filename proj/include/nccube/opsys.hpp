#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nccube/matrix.hpp"

namespace nccube {

/// The finite-dimensional systems in the catalog. Matrix-space parameters
/// follow the usual convention: Tridiagonal(n) and Arrow(n) live inside
/// (n+1) x (n+1) matrices, FullMatrix(n) is all of them, CubeVector(n) is
/// C^{2n}, NCCube(n) is span{1, h_1..h_n}, UnitaryGen(n) is span{1, u_i, u_i*},
/// WordSystem(n) is span{u_i* u_j}.
enum class SystemKind { NCCube, UnitaryGen, Tridiagonal, Arrow, WordSystem, CubeVector, CoproductC2, FullMatrix };

struct SystemId {
    SystemKind kind;
    int n;

    bool operator==(const SystemId&) const = default;

    std::vector<std::string> basisLabels() const;
    /// Ambient matrix size for the matrix systems (0 for the abstract ones).
    int matrixDim() const;
    std::string str() const;
};

/// Element of system (x) M_k, stored as one k x k coefficient block per
/// basis label (missing label = zero block). Hermitian elements of
/// UnitaryGen systems may omit the u_i* blocks; they are implied adjoints.
struct TensorElement {
    SystemId system;
    int k = 1;
    std::map<std::string, ComplexMatrix> coeffs;

    static TensorElement zero(SystemId system, int k) { return TensorElement{system, k, {}}; }
    static TensorElement ncElement(int n, int k, const HermitianMatrix& a0, const std::vector<HermitianMatrix>& a);
    static TensorElement ncScalar(int n, double a0, const std::vector<double>& a);

    const ComplexMatrix& coeff(const std::string& label) const;  // zero block when absent
    void setCoeff(const std::string& label, ComplexMatrix m);
    void validate() const;

    /// Coefficient of u_i* for UnitaryGen elements, honouring the implied-
    /// adjoint convention for Hermitian elements.
    ComplexMatrix starCoeff(int i) const;

    bool isHermitianElement(double tol = 1e-9) const;

    /// Largest entrywise difference over all blocks.
    double distance(const TensorElement& other) const;
};

/// Explicit basis of a kernel / null subspace, as integer coefficient
/// vectors over the ambient basis order.
struct KernelSubspace {
    SystemId ambient;
    std::vector<std::vector<double>> basisVectors;

    int dim() const { return static_cast<int>(basisVectors.size()); }
    /// Realise a coefficient vector as an ambient matrix (matrix systems
    /// and CubeVector only; cube vectors become diagonal matrices).
    ComplexMatrix realise(const std::vector<double>& coeffs) const;
};

enum class KernelName { Jn, Qn, Kn1, Ln1, D0, Sn0 };

KernelName kernelNameFromString(const std::string& s);
std::string kernelNameToString(KernelName name);

/// The paper's kernels with exact small-integer bases: Jn and Qn inside
/// C^{2n}; Kn1 inside the tridiagonal system; Ln1 inside the arrow system;
/// D0 (trace-zero diagonals) inside the full matrix algebra; Sn0 inside
/// span{1, u_i, u_i*}.
KernelSubspace kernelBasis(KernelName name, int n);

struct NullCheckResult {
    bool isNull;
    /// A nonzero PSD element of the span when not null (unit trace).
    std::optional<ComplexMatrix> witness;
};

/// Decides span ∩ {positive elements of the ambient} = {0} for ambients with
/// a computable level-1 cone (CubeVector, Tridiagonal, Arrow, FullMatrix),
/// via the conic alternative: the span of Hermitian parts meets the PSD cone
/// only at 0 iff its trace-orthocomplement contains a positive definite
/// matrix, which is a feasibility run of the engine.
NullCheckResult isNullSubspace(const KernelSubspace& j);

enum class Level1Class { StronglyPositive, Boundary, NotPositive };

struct Level1Result {
    Level1Class cls;
    double margin;                  // a0 - sum |a_i|
    std::vector<int> witnessSigns;  // only for NotPositive
};

/// Closed-form level-1 classification of a0*1 + sum a_i h_i in NC(n):
/// margin a0 - sum|a_i| against the boundary tolerance 1e-9.
Level1Result level1PositivityNC(int n, double a0, const std::vector<double>& a);

/// Degree multisets of the path graph under the tridiagonal system versus
/// the star graph under the arrow system differ exactly when n >= 3.
bool graphDistinguishTR(int n);

/// Level-1 pairing of a functional a in the predual realisation
/// {a : a_1+a_2 = a_3+a_4 = ... } with a cube vector x (k = 1); errors when
/// a violates the membership constraints.
double dualPairingCheck(int n, const std::vector<double>& a, const TensorElement& x);

}  // namespace nccube
