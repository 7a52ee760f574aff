#include "nccube/quotient_maps.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "nccube/hermlin.hpp"
#include "nccube/riesz.hpp"

namespace nccube {

namespace {

std::string eLabel(int i, int j) { return "E_" + std::to_string(i) + "_" + std::to_string(j); }
std::string hLabel(int i) { return "h" + std::to_string(i); }
std::string uLabel(int i) { return "u" + std::to_string(i); }
std::string uStarLabel(int i) { return "u" + std::to_string(i) + "*"; }
std::string cubeLabel(int i) { return "e" + std::to_string(i); }

const SubalgebraSpec& fullAlgebra(int k) { return SubalgebraSpec::fullCached(k); }

// Orthonormal basis of the anti-Hermitian k x k matrices.
std::vector<ComplexMatrix> antiHermBasis(int k) {
    std::vector<ComplexMatrix> out;
    const double inv = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < k; ++a) {
        ComplexMatrix e(k, k);
        e(a, a) = Complex(0, 1);
        out.push_back(std::move(e));
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            ComplexMatrix e(k, k);
            e(a, b) = inv;
            e(b, a) = -inv;
            out.push_back(std::move(e));
            ComplexMatrix f(k, k);
            f(a, b) = Complex(0, inv);
            f(b, a) = Complex(0, inv);
            out.push_back(std::move(f));
        }
    return out;
}

void requireSystem(const TensorElement& x, SystemKind kind, int n, const char* mapName) {
    if (x.system.kind != kind || x.system.n != n)
        throw InvalidInput(std::string(mapName) + ": element lives on " + x.system.str() + ", expected " +
                           SystemId{kind, n}.str());
}

HermitianMatrix hermCoeff(const TensorElement& x, const std::string& label) { return HermitianMatrix(x.coeff(label)); }

struct NCTarget {
    int n, k;
    HermitianMatrix a0;
    std::vector<HermitianMatrix> a;
};

NCTarget unpackNC(const TensorElement& x, const char* where) {
    if (x.system.kind != SystemKind::NCCube) throw InvalidInput(std::string(where) + ": expected an NC(n) element");
    if (!x.isHermitianElement()) throw InvalidInput(std::string(where) + ": element must be Hermitian");
    NCTarget t;
    t.n = x.system.n;
    t.k = x.k;
    t.a0 = hermCoeff(x, "1");
    for (int i = 1; i <= t.n; ++i) t.a.push_back(hermCoeff(x, hLabel(i)));
    return t;
}

}  // namespace

SystemId QuotientMapId::domain() const {
    switch (name) {
        case MapName::Phi:
        case MapName::Rho:
            return {SystemKind::Tridiagonal, n};
        case MapName::Psi:
            return {SystemKind::UnitaryGen, n};
        case MapName::Gamma:
        case MapName::PsiGamma:
            return {SystemKind::Arrow, n};
        case MapName::Theta:
            return {SystemKind::CubeVector, n};
        case MapName::Beta:
            return {SystemKind::FullMatrix, n};
        case MapName::CoproductIota:
            return {SystemKind::CubeVector, 1};
    }
    throw InvalidInput("bad map id");
}

SystemId QuotientMapId::codomain() const {
    switch (name) {
        case MapName::Phi:
        case MapName::Gamma:
            return {SystemKind::UnitaryGen, n};
        case MapName::Psi:
        case MapName::Rho:
        case MapName::PsiGamma:
        case MapName::Theta:
            return {SystemKind::NCCube, n};
        case MapName::Beta:
            return {SystemKind::WordSystem, n};
        case MapName::CoproductIota:
            return {SystemKind::CubeVector, n};
    }
    throw InvalidInput("bad map id");
}

TensorElement applyMap(const QuotientMapId& id, const TensorElement& x) {
    const int n = id.n;
    if (n < 1) throw InvalidInput("applyMap needs n >= 1");
    const SystemId dom = id.domain();
    if (!(x.system == dom)) requireSystem(x, dom.kind, dom.n, "applyMap");
    const int k = x.k;
    TensorElement out = TensorElement::zero(id.codomain(), k);

    switch (id.name) {
        case MapName::Phi: {
            const double scale = 1.0 / (n + 1);
            ComplexMatrix unit(k, k);
            for (int i = 1; i <= n + 1; ++i) unit += x.coeff(eLabel(i, i));
            out.setCoeff("1", unit * Complex(scale, 0));
            for (int i = 1; i <= n; ++i) {
                out.setCoeff(uLabel(i), x.coeff(eLabel(i, i + 1)) * Complex(scale, 0));
                out.setCoeff(uStarLabel(i), x.coeff(eLabel(i + 1, i)) * Complex(scale, 0));
            }
            break;
        }
        case MapName::Psi: {
            out.setCoeff("1", x.coeff("1"));
            for (int i = 1; i <= n; ++i) out.setCoeff(hLabel(i), x.coeff(uLabel(i)) + x.starCoeff(i));
            break;
        }
        case MapName::Rho:
            return applyMap({MapName::Psi, n}, applyMap({MapName::Phi, n}, x));
        case MapName::Gamma: {
            const double scale = 1.0 / (n + 1);
            ComplexMatrix unit(k, k);
            for (int i = 1; i <= n + 1; ++i) unit += x.coeff(eLabel(i, i));
            out.setCoeff("1", unit * Complex(scale, 0));
            for (int j = 2; j <= n + 1; ++j) {
                out.setCoeff(uStarLabel(j - 1), x.coeff(eLabel(1, j)) * Complex(scale, 0));
                out.setCoeff(uLabel(j - 1), x.coeff(eLabel(j, 1)) * Complex(scale, 0));
            }
            break;
        }
        case MapName::PsiGamma:
            return applyMap({MapName::Psi, n}, applyMap({MapName::Gamma, n}, x));
        case MapName::Theta: {
            const double scale = 1.0 / (2 * n);
            ComplexMatrix unit(k, k);
            for (int j = 1; j <= 2 * n; ++j) unit += x.coeff(cubeLabel(j));
            out.setCoeff("1", unit * Complex(scale, 0));
            for (int i = 1; i <= n; ++i)
                out.setCoeff(hLabel(i), (x.coeff(cubeLabel(2 * i - 1)) - x.coeff(cubeLabel(2 * i))) * Complex(scale, 0));
            break;
        }
        case MapName::Beta: {
            const double scale = 1.0 / (n + 1);
            ComplexMatrix unit(k, k);
            for (int i = 1; i <= n + 1; ++i) unit += x.coeff(eLabel(i, i));
            out.setCoeff("1", unit * Complex(scale, 0));
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j <= n + 1; ++j) {
                    if (i == j) continue;
                    out.setCoeff("w_" + std::to_string(i - 1) + "_" + std::to_string(j - 1),
                                 x.coeff(eLabel(i, j)) * Complex(scale, 0));
                }
            break;
        }
        case MapName::CoproductIota: {
            if (id.iotaSlot < 1 || id.iotaSlot > n) throw InvalidInput("coproduct slot out of range");
            out.setCoeff(cubeLabel(2 * id.iotaSlot - 1), x.coeff("e1") * Complex(n, 0));
            out.setCoeff(cubeLabel(2 * id.iotaSlot), x.coeff("e2") * Complex(n, 0));
            break;
        }
    }
    return out;
}

KernelSubspace kernelOf(const QuotientMapId& id) {
    const int n = id.n;
    switch (id.name) {
        case MapName::Phi:
        case MapName::Gamma: {
            // trace-zero diagonals inside the domain system
            KernelSubspace out;
            out.ambient = id.domain();
            const auto labels = out.ambient.basisLabels();
            for (int i = 1; i <= n; ++i) {
                std::vector<double> v(labels.size(), 0.0);
                for (size_t t = 0; t < labels.size(); ++t) {
                    if (labels[t] == eLabel(i, i)) v[t] = 1.0;
                    if (labels[t] == eLabel(i + 1, i + 1)) v[t] = -1.0;
                }
                out.basisVectors.push_back(std::move(v));
            }
            return out;
        }
        case MapName::Psi:
            return kernelBasis(KernelName::Sn0, n);
        case MapName::Rho:
            return kernelBasis(KernelName::Kn1, n);
        case MapName::PsiGamma:
            return kernelBasis(KernelName::Ln1, n);
        case MapName::Theta:
            return kernelBasis(KernelName::Jn, n);
        case MapName::Beta:
            return kernelBasis(KernelName::D0, n);
        case MapName::CoproductIota:
            throw InvalidInput("coproduct embeddings are injective; no kernel subspace");
    }
    throw InvalidInput("bad map id");
}

double tauQnWeight(int n, int pairIndex) {
    if (pairIndex < 1 || pairIndex > n) throw InvalidInput("tauQnWeight index out of range");
    return pairIndex == 1 ? std::ldexp(1.0, 1 - n) : std::ldexp(1.0, pairIndex - n - 1);
}

TensorElement applyTauQn(const TensorElement& x) {
    if (x.system.kind != SystemKind::CubeVector) throw InvalidInput("applyTauQn expects a cube element");
    const int n = x.system.n;
    const int k = x.k;
    TensorElement out = TensorElement::zero({SystemKind::NCCube, n}, k);
    ComplexMatrix unit(k, k);
    for (int i = 1; i <= n; ++i) {
        const double half = 0.5 * tauQnWeight(n, i);
        unit += (x.coeff(cubeLabel(2 * i - 1)) + x.coeff(cubeLabel(2 * i))) * Complex(half, 0);
        out.setCoeff(hLabel(i), (x.coeff(cubeLabel(2 * i - 1)) - x.coeff(cubeLabel(2 * i))) * Complex(half, 0));
    }
    out.setCoeff("1", unit);
    return out;
}

TensorElement coproductEmbed(int slot, int n, const ComplexMatrix& s1, const ComplexMatrix& s2, int k) {
    if (slot < 1 || slot > n) throw InvalidInput("coproductEmbed slot out of range");
    TensorElement s = TensorElement::zero({SystemKind::CubeVector, 1}, k);
    s.setCoeff("e1", s1);
    s.setCoeff("e2", s2);
    return applyMap({MapName::CoproductIota, n, slot}, s);
}

MaxRoute maxRouteFromString(const std::string& s) {
    if (s == "tridiag") return MaxRoute::Tridiag;
    if (s == "arrow") return MaxRoute::Arrow;
    if (s == "diagonal") return MaxRoute::Diagonal;
    if (s == "qn") return MaxRoute::Qn;
    throw InvalidInput("unknown route: " + s);
}

std::string maxRouteToString(MaxRoute r) {
    switch (r) {
        case MaxRoute::Tridiag:
            return "tridiag";
        case MaxRoute::Arrow:
            return "arrow";
        case MaxRoute::Diagonal:
            return "diagonal";
        case MaxRoute::Qn:
            return "qn";
    }
    return "?";
}

namespace {

// Shared scaffolding for the tridiagonal and arrow completion problems:
// free Hermitian diagonal blocks B_1..B_n (B_{n+1} = A_0 - sum), free
// anti-Hermitian parts of the off-diagonal blocks, one big PSD block.
LiftProblem matrixCompletionProblem(MaxRoute route, const NCTarget& t) {
    const int n = t.n, k = t.k;
    const int bign = (n + 1) * k;
    const auto& hermON = fullAlgebra(k).hermitianBasis();
    const auto antiON = antiHermBasis(k);
    const int kk = static_cast<int>(hermON.size());
    const int d = 2 * n * kk;

    // off-diagonal block positions (0-based block rows/cols): tridiagonal
    // uses (i, i+1) for generator i, arrow uses (0, i+1).
    const auto offPos = [&](int i) { return route == MaxRoute::Tridiag ? std::pair<int, int>{i, i + 1} : std::pair<int, int>{0, i + 1}; };

    AffineBlock blk;
    {
        ComplexMatrix c(bign, bign);
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) c(n * k + p, n * k + q) = t.a0(p, q);
        for (int i = 0; i < n; ++i) {
            const auto [r, s] = offPos(i);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) {
                    const Complex half = 0.5 * t.a[static_cast<size_t>(i)](p, q);
                    c(r * k + p, s * k + q) = half;
                    c(s * k + q, r * k + p) = std::conj(half);
                }
        }
        blk.constant = HermitianMatrix(c);
    }
    blk.coeff.reserve(static_cast<size_t>(d));
    for (int i = 0; i < n; ++i)
        for (int tix = 0; tix < kk; ++tix) {
            ComplexMatrix c(bign, bign);
            const HermitianMatrix& h = hermON[static_cast<size_t>(tix)];
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) {
                    c(i * k + p, i * k + q) += h(p, q);
                    c(n * k + p, n * k + q) -= h(p, q);
                }
            blk.coeff.emplace_back(c);
        }
    for (int i = 0; i < n; ++i)
        for (int tix = 0; tix < kk; ++tix) {
            ComplexMatrix c(bign, bign);
            const ComplexMatrix& a = antiON[static_cast<size_t>(tix)];
            const auto [r, s] = offPos(i);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) {
                    c(r * k + p, s * k + q) += a(p, q);
                    c(s * k + q, r * k + p) += std::conj(a(p, q));
                }
            blk.coeff.emplace_back(c);
        }

    LiftProblem lp;
    lp.route = route;
    lp.n = n;
    lp.k = k;
    lp.domainSystem = SystemId{route == MaxRoute::Tridiag ? SystemKind::Tridiagonal : SystemKind::Arrow, n};
    lp.problem = AffinePSDProblem(d);
    lp.problem.addBlock(std::move(blk));
    return lp;
}

}  // namespace

LiftProblem liftParameterisation(MaxRoute route, const TensorElement& target) {
    const NCTarget t = unpackNC(target, "liftParameterisation");
    if (route == MaxRoute::Qn) return qnRoute(target);
    if (route == MaxRoute::Tridiag || route == MaxRoute::Arrow) {
        LiftProblem lp = matrixCompletionProblem(route, t);
        lp.target = target;
        return lp;
    }

    // Diagonal route: the scheme problem of the cube realisation, shared
    // with the Riesz solver.
    const int n = t.n, k = t.k;
    HermitianMatrix common = t.a0;
    for (int j = 2; j <= n; ++j) common -= t.a[static_cast<size_t>(j - 1)];
    HermitianMatrix a1 = common;
    a1 += t.a[0];
    a1 *= static_cast<double>(n);
    HermitianMatrix a2 = common;
    a2 -= t.a[0];
    a2 *= static_cast<double>(n);
    std::vector<HermitianMatrix> b;
    for (int j = 2; j <= n; ++j) {
        HermitianMatrix bi = t.a[static_cast<size_t>(j - 1)];
        bi *= -2.0 * n;
        b.push_back(std::move(bi));
    }

    LiftProblem lp;
    lp.route = MaxRoute::Diagonal;
    lp.n = n;
    lp.k = k;
    lp.domainSystem = SystemId{SystemKind::CubeVector, n};
    lp.problem = buildSchemeProblem(a1, a2, b, fullAlgebra(k).hermitianBasis());
    lp.target = target;
    return lp;
}

LiftProblem qnRoute(const TensorElement& target) {
    const NCTarget t = unpackNC(target, "qnRoute");
    const int n = t.n, k = t.k;
    const auto& hermON = fullAlgebra(k).hermitianBasis();
    const int kk = static_cast<int>(hermON.size());
    const int d = (n - 1) * kk;

    LiftProblem lp;
    lp.route = MaxRoute::Qn;
    lp.n = n;
    lp.k = k;
    lp.domainSystem = SystemId{SystemKind::CubeVector, n};
    lp.problem = AffinePSDProblem(d);
    lp.target = target;

    const KernelSubspace qn = kernelBasis(KernelName::Qn, n);
    for (int j = 1; j <= 2 * n; ++j) {
        const int pair = (j + 1) / 2;
        const double invAlpha = 1.0 / tauQnWeight(n, pair);
        AffineBlock blk;
        HermitianMatrix c = t.a[static_cast<size_t>(pair - 1)];
        c *= (j % 2 == 1) ? invAlpha : -invAlpha;
        c += t.a0;
        blk.constant = std::move(c);
        for (int i = 0; i < n - 1; ++i) {
            const double w = qn.basisVectors[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
            for (int tix = 0; tix < kk; ++tix) {
                HermitianMatrix f = hermON[static_cast<size_t>(tix)];
                f *= w;
                blk.coeff.push_back(std::move(f));
            }
        }
        lp.problem.addBlock(std::move(blk));
    }
    return lp;
}

std::vector<HermitianMatrix> LiftProblem::blockMatrices(const std::vector<double>& v) const {
    std::vector<HermitianMatrix> out;
    for (const auto& b : problem.blocks()) out.push_back(b.evaluate(v));
    return out;
}

TensorElement LiftProblem::lifting(const std::vector<double>& v) const {
    const NCTarget t = unpackNC(target, "lifting");
    TensorElement out = TensorElement::zero(domainSystem, k);
    if (route == MaxRoute::Tridiag || route == MaxRoute::Arrow) {
        const auto& hermON = fullAlgebra(k).hermitianBasis();
        const auto antiON = antiHermBasis(k);
        const int kk = static_cast<int>(hermON.size());
        HermitianMatrix last = t.a0;
        const double up = n + 1;
        for (int i = 0; i < n; ++i) {
            HermitianMatrix bi = HermitianMatrix::zero(k);
            for (int tix = 0; tix < kk; ++tix) bi.addScaled(v[static_cast<size_t>(i * kk + tix)], hermON[static_cast<size_t>(tix)]);
            last -= bi;
            bi *= up;
            out.setCoeff(eLabel(i + 1, i + 1), bi.mat());
        }
        last *= up;
        out.setCoeff(eLabel(n + 1, n + 1), last.mat());
        for (int i = 0; i < n; ++i) {
            ComplexMatrix xi = t.a[static_cast<size_t>(i)].mat();
            xi *= Complex(0.5, 0);
            for (int tix = 0; tix < kk; ++tix) {
                const double w = v[static_cast<size_t>((n + i) * kk + tix)];
                if (w != 0.0) xi += antiON[static_cast<size_t>(tix)] * Complex(w, 0);
            }
            xi *= Complex(up, 0);
            const auto [r, s] = route == MaxRoute::Tridiag ? std::pair<int, int>{i + 1, i + 2} : std::pair<int, int>{1, i + 2};
            out.setCoeff(eLabel(r, s), xi);
            out.setCoeff(eLabel(s, r), xi.adjoint());
        }
        return out;
    }
    // cube routes: the blocks are the lifting coordinates themselves
    const std::vector<HermitianMatrix> blocks = blockMatrices(v);
    for (int j = 1; j <= 2 * n; ++j) out.setCoeff("e" + std::to_string(j), blocks[static_cast<size_t>(j - 1)].mat());
    return out;
}

TensorElement LiftProblem::pushforward(const TensorElement& lifted) const {
    switch (route) {
        case MaxRoute::Tridiag:
            return applyMap({MapName::Rho, n}, lifted);
        case MaxRoute::Arrow:
            return applyMap({MapName::PsiGamma, n}, lifted);
        case MaxRoute::Diagonal:
            return applyMap({MapName::Theta, n}, lifted);
        case MaxRoute::Qn:
            return applyTauQn(lifted);
    }
    throw InvalidInput("bad route");
}

}  // namespace nccube
