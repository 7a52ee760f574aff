#include "nccube/opsys.hpp"

#include <algorithm>
#include <cmath>

#include "nccube/hermlin.hpp"
#include "nccube/sdpfeas.hpp"

namespace nccube {

namespace {

std::string eLabel(int i, int j) { return "E_" + std::to_string(i) + "_" + std::to_string(j); }

const ComplexMatrix& zeroBlock(int k) {
    thread_local std::map<int, ComplexMatrix> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, ComplexMatrix(k, k)).first;
    return it->second;
}

}  // namespace

std::vector<std::string> SystemId::basisLabels() const {
    std::vector<std::string> out;
    switch (kind) {
        case SystemKind::NCCube:
        case SystemKind::CoproductC2:
            out.push_back("1");
            for (int i = 1; i <= n; ++i) out.push_back("h" + std::to_string(i));
            break;
        case SystemKind::UnitaryGen:
            out.push_back("1");
            for (int i = 1; i <= n; ++i) out.push_back("u" + std::to_string(i));
            for (int i = 1; i <= n; ++i) out.push_back("u" + std::to_string(i) + "*");
            break;
        case SystemKind::Tridiagonal:
            for (int i = 1; i <= n + 1; ++i) out.push_back(eLabel(i, i));
            for (int i = 1; i <= n; ++i) {
                out.push_back(eLabel(i, i + 1));
                out.push_back(eLabel(i + 1, i));
            }
            break;
        case SystemKind::Arrow:
            for (int i = 1; i <= n + 1; ++i) out.push_back(eLabel(i, i));
            for (int j = 2; j <= n + 1; ++j) {
                out.push_back(eLabel(1, j));
                out.push_back(eLabel(j, 1));
            }
            break;
        case SystemKind::WordSystem:
            out.push_back("1");
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    if (i != j) out.push_back("w_" + std::to_string(i) + "_" + std::to_string(j));
            break;
        case SystemKind::CubeVector:
            for (int i = 1; i <= 2 * n; ++i) out.push_back("e" + std::to_string(i));
            break;
        case SystemKind::FullMatrix:
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j <= n + 1; ++j) out.push_back(eLabel(i, j));
            break;
    }
    return out;
}

int SystemId::matrixDim() const {
    switch (kind) {
        case SystemKind::Tridiagonal:
        case SystemKind::Arrow:
        case SystemKind::FullMatrix:
            return n + 1;
        case SystemKind::CubeVector:
            return 2 * n;
        default:
            return 0;
    }
}

std::string SystemId::str() const {
    switch (kind) {
        case SystemKind::NCCube:
            return "NC(" + std::to_string(n) + ")";
        case SystemKind::UnitaryGen:
            return "S" + std::to_string(n);
        case SystemKind::Tridiagonal:
            return "T" + std::to_string(n + 1);
        case SystemKind::Arrow:
            return "R" + std::to_string(n + 1);
        case SystemKind::WordSystem:
            return "W" + std::to_string(n);
        case SystemKind::CubeVector:
            return "C^" + std::to_string(2 * n);
        case SystemKind::CoproductC2:
            return "coprod_C2(" + std::to_string(n) + ")";
        case SystemKind::FullMatrix:
            return "M" + std::to_string(n + 1);
    }
    return "?";
}

TensorElement TensorElement::ncElement(int n, int k, const HermitianMatrix& a0, const std::vector<HermitianMatrix>& a) {
    if (static_cast<int>(a.size()) != n) throw InvalidInput("ncElement needs n coefficient blocks");
    TensorElement x{SystemId{SystemKind::NCCube, n}, k, {}};
    x.setCoeff("1", a0.mat());
    for (int i = 0; i < n; ++i) x.setCoeff("h" + std::to_string(i + 1), a[static_cast<size_t>(i)].mat());
    return x;
}

TensorElement TensorElement::ncScalar(int n, double a0, const std::vector<double>& a) {
    std::vector<HermitianMatrix> blocks;
    for (double v : a) blocks.push_back(HermitianMatrix::diagonal({v}));
    return ncElement(n, 1, HermitianMatrix::diagonal({a0}), blocks);
}

const ComplexMatrix& TensorElement::coeff(const std::string& label) const {
    const auto it = coeffs.find(label);
    if (it != coeffs.end()) return it->second;
    return zeroBlock(k);
}

void TensorElement::setCoeff(const std::string& label, ComplexMatrix m) {
    if (m.rows() != k || m.cols() != k) throw InvalidInput("coefficient block must be k x k");
    if (!m.allFinite()) throw InvalidInput("non-finite coefficient entry");
    coeffs[label] = std::move(m);
}

void TensorElement::validate() const {
    const auto labels = system.basisLabels();
    for (const auto& [label, block] : coeffs) {
        if (std::find(labels.begin(), labels.end(), label) == labels.end())
            throw InvalidInput("unknown basis label '" + label + "' for system " + system.str());
        if (block.rows() != k || block.cols() != k) throw InvalidInput("block size mismatch for label " + label);
        if (!block.allFinite()) throw InvalidInput("non-finite entry in block " + label);
    }
}

ComplexMatrix TensorElement::starCoeff(int i) const {
    if (system.kind != SystemKind::UnitaryGen) throw InvalidInput("starCoeff only applies to unitary-generator systems");
    const std::string starLabel = "u" + std::to_string(i) + "*";
    if (coeffs.count(starLabel)) return coeff(starLabel);
    return coeff("u" + std::to_string(i)).adjoint();
}

bool TensorElement::isHermitianElement(double tol) const {
    switch (system.kind) {
        case SystemKind::NCCube:
        case SystemKind::CoproductC2:
        case SystemKind::CubeVector: {
            for (const auto& [label, block] : coeffs)
                if (block.hermitianDefect() > tol) return false;
            return true;
        }
        case SystemKind::UnitaryGen: {
            if (coeff("1").hermitianDefect() > tol) return false;
            for (int i = 1; i <= system.n; ++i) {
                const std::string star = "u" + std::to_string(i) + "*";
                if (coeffs.count(star)) {
                    const ComplexMatrix diff = coeff(star) - coeff("u" + std::to_string(i)).adjoint();
                    if (diff.maxAbsEntry() > tol) return false;
                }
            }
            return true;
        }
        case SystemKind::Tridiagonal:
        case SystemKind::Arrow:
        case SystemKind::FullMatrix: {
            const int m = system.matrixDim();
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) {
                    if (!coeffs.count(eLabel(i, j)) && !coeffs.count(eLabel(j, i))) continue;
                    const ComplexMatrix diff = coeff(eLabel(i, j)) - coeff(eLabel(j, i)).adjoint();
                    if (diff.maxAbsEntry() > tol) return false;
                }
            return true;
        }
        case SystemKind::WordSystem: {
            if (coeff("1").hermitianDefect() > tol) return false;
            for (int i = 0; i <= system.n; ++i)
                for (int j = 0; j <= system.n; ++j) {
                    if (i == j) continue;
                    const std::string lab = "w_" + std::to_string(i) + "_" + std::to_string(j);
                    const std::string adj = "w_" + std::to_string(j) + "_" + std::to_string(i);
                    if (!coeffs.count(lab) && !coeffs.count(adj)) continue;
                    const ComplexMatrix diff = coeff(lab) - coeff(adj).adjoint();
                    if (diff.maxAbsEntry() > tol) return false;
                }
            return true;
        }
    }
    return false;
}

double TensorElement::distance(const TensorElement& other) const {
    if (!(system == other.system) || k != other.k) throw InvalidInput("distance: element shape mismatch");
    double d = 0;
    for (const auto& label : system.basisLabels()) d = std::max(d, (coeff(label) - other.coeff(label)).maxAbsEntry());
    return d;
}

ComplexMatrix KernelSubspace::realise(const std::vector<double>& coeffs) const {
    const auto labels = ambient.basisLabels();
    if (coeffs.size() != labels.size()) throw InvalidInput("kernel coefficient length mismatch");
    const int m = ambient.matrixDim();
    if (m == 0) throw InvalidInput("kernel ambient has no matrix realisation");
    ComplexMatrix out(m, m);
    for (size_t t = 0; t < labels.size(); ++t) {
        if (coeffs[t] == 0.0) continue;
        const std::string& lab = labels[t];
        if (ambient.kind == SystemKind::CubeVector) {
            const int i = std::stoi(lab.substr(1)) - 1;
            out(i, i) += coeffs[t];
        } else {
            const size_t us1 = lab.find('_');
            const size_t us2 = lab.find('_', us1 + 1);
            const int i = std::stoi(lab.substr(us1 + 1, us2 - us1 - 1)) - 1;
            const int j = std::stoi(lab.substr(us2 + 1)) - 1;
            out(i, j) += coeffs[t];
        }
    }
    return out;
}

KernelName kernelNameFromString(const std::string& s) {
    if (s == "Jn") return KernelName::Jn;
    if (s == "Qn") return KernelName::Qn;
    if (s == "Kn1") return KernelName::Kn1;
    if (s == "Ln1") return KernelName::Ln1;
    if (s == "D0") return KernelName::D0;
    if (s == "Sn0") return KernelName::Sn0;
    throw InvalidInput("unknown kernel name: " + s);
}

std::string kernelNameToString(KernelName name) {
    switch (name) {
        case KernelName::Jn:
            return "Jn";
        case KernelName::Qn:
            return "Qn";
        case KernelName::Kn1:
            return "Kn1";
        case KernelName::Ln1:
            return "Ln1";
        case KernelName::D0:
            return "D0";
        case KernelName::Sn0:
            return "Sn0";
    }
    return "?";
}

KernelSubspace kernelBasis(KernelName name, int n) {
    if (n < 1) throw InvalidInput("kernelBasis needs n >= 1");
    KernelSubspace out;
    switch (name) {
        case KernelName::Jn: {
            out.ambient = SystemId{SystemKind::CubeVector, n};
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<double> v(static_cast<size_t>(2 * n), 0.0);
                v[0] = v[1] = 1.0;
                v[static_cast<size_t>(2 * i)] = v[static_cast<size_t>(2 * i + 1)] = -1.0;
                out.basisVectors.push_back(std::move(v));
            }
            break;
        }
        case KernelName::Qn: {
            out.ambient = SystemId{SystemKind::CubeVector, n};
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<double> v(static_cast<size_t>(2 * n), 0.0);
                for (int j = 0; j < 2 * i; ++j) v[static_cast<size_t>(j)] = 1.0;
                v[static_cast<size_t>(2 * i)] = v[static_cast<size_t>(2 * i + 1)] = -1.0;
                out.basisVectors.push_back(std::move(v));
            }
            break;
        }
        case KernelName::Kn1:
        case KernelName::Ln1: {
            const SystemKind kind = name == KernelName::Kn1 ? SystemKind::Tridiagonal : SystemKind::Arrow;
            out.ambient = SystemId{kind, n};
            const auto labels = out.ambient.basisLabels();
            const auto indexOf = [&](const std::string& lab) {
                return static_cast<size_t>(std::find(labels.begin(), labels.end(), lab) - labels.begin());
            };
            for (int i = 1; i <= n; ++i) {
                std::vector<double> v(labels.size(), 0.0);
                v[indexOf(eLabel(i, i))] = 1.0;
                v[indexOf(eLabel(i + 1, i + 1))] = -1.0;
                out.basisVectors.push_back(std::move(v));
            }
            if (name == KernelName::Kn1) {
                for (int i = 1; i <= n; ++i) {
                    std::vector<double> v(labels.size(), 0.0);
                    v[indexOf(eLabel(i, i + 1))] = 1.0;
                    v[indexOf(eLabel(i + 1, i))] = -1.0;
                    out.basisVectors.push_back(std::move(v));
                }
            } else {
                for (int j = 2; j <= n + 1; ++j) {
                    std::vector<double> v(labels.size(), 0.0);
                    v[indexOf(eLabel(1, j))] = 1.0;
                    v[indexOf(eLabel(j, 1))] = -1.0;
                    out.basisVectors.push_back(std::move(v));
                }
            }
            break;
        }
        case KernelName::D0: {
            out.ambient = SystemId{SystemKind::FullMatrix, n};
            const auto labels = out.ambient.basisLabels();
            const auto indexOf = [&](const std::string& lab) {
                return static_cast<size_t>(std::find(labels.begin(), labels.end(), lab) - labels.begin());
            };
            for (int i = 1; i <= n; ++i) {
                std::vector<double> v(labels.size(), 0.0);
                v[indexOf(eLabel(i, i))] = 1.0;
                v[indexOf(eLabel(i + 1, i + 1))] = -1.0;
                out.basisVectors.push_back(std::move(v));
            }
            break;
        }
        case KernelName::Sn0: {
            out.ambient = SystemId{SystemKind::UnitaryGen, n};
            // basis order: 1, u1..un, u1*..un*
            for (int i = 1; i <= n; ++i) {
                std::vector<double> v(static_cast<size_t>(2 * n + 1), 0.0);
                v[static_cast<size_t>(i)] = 1.0;
                v[static_cast<size_t>(n + i)] = -1.0;
                out.basisVectors.push_back(std::move(v));
            }
            break;
        }
    }
    return out;
}

namespace {

// Orthonormal basis (trace inner product) of the real span of the given
// Hermitian matrices.
std::vector<HermitianMatrix> orthonormalise(std::vector<HermitianMatrix> cand) {
    std::vector<HermitianMatrix> out;
    for (auto& h : cand) {
        for (const auto& o : out) h.addScaled(-realInner(o, h), o);
        const double nrm = h.frobeniusNorm();
        if (nrm > 1e-9) {
            h *= 1.0 / nrm;
            out.push_back(std::move(h));
        }
    }
    return out;
}

// Hermitian part of the complex span of the kernel's realised matrices.
std::vector<HermitianMatrix> hermitianSpan(const KernelSubspace& j) {
    std::vector<HermitianMatrix> cand;
    for (const auto& v : j.basisVectors) {
        const ComplexMatrix b = j.realise(v);
        cand.emplace_back(b);  // (B + B†)/2
        ComplexMatrix ib = b;
        ib *= Complex(0, 1);
        cand.emplace_back(ib);  // i(B - B†)/2
    }
    return orthonormalise(std::move(cand));
}

std::vector<HermitianMatrix> fullHermBasisMatrices(int m) {
    std::vector<HermitianMatrix> out;
    for (int a = 0; a < m; ++a) {
        ComplexMatrix e(m, m);
        e(a, a) = 1.0;
        out.emplace_back(e);
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            ComplexMatrix e(m, m);
            e(a, b) = e(b, a) = 1.0;
            out.emplace_back(e);
            ComplexMatrix f(m, m);
            f(a, b) = Complex(0, 1);
            f(b, a) = Complex(0, -1);
            out.emplace_back(f);
        }
    return out;
}

}  // namespace

NullCheckResult isNullSubspace(const KernelSubspace& j) {
    switch (j.ambient.kind) {
        case SystemKind::CubeVector:
        case SystemKind::Tridiagonal:
        case SystemKind::Arrow:
        case SystemKind::FullMatrix:
            break;
        default:
            throw InvalidInput("isNullSubspace: ambient " + j.ambient.str() + " has no computable level-1 cone here");
    }
    const int m = j.ambient.matrixDim();
    const std::vector<HermitianMatrix> span = hermitianSpan(j);
    if (span.empty()) return {true, std::nullopt};

    // Orthocomplement of the span inside the Hermitian matrices.
    std::vector<HermitianMatrix> compCand;
    for (auto& h : fullHermBasisMatrices(m)) {
        for (const auto& s : span) h.addScaled(-realInner(s, h), s);
        compCand.push_back(std::move(h));
    }
    const std::vector<HermitianMatrix> comp = orthonormalise(std::move(compCand));

    // Null iff the orthocomplement contains a positive definite matrix.
    AffinePSDProblem alt(static_cast<int>(comp.size()));
    AffineBlock blk;
    blk.constant = HermitianMatrix::zero(m);
    blk.coeff = comp;
    alt.addBlock(blk);
    const FeasResult r = solveMaxMargin(alt);
    if (r.status == FeasStatus::Feasible) return {true, std::nullopt};

    // Not null: search a witness, a unit-trace PSD element of the span.
    std::vector<double> traces;
    double traceNorm = 0;
    for (const auto& s : span) {
        traces.push_back(s.trace().real());
        traceNorm += traces.back() * traces.back();
    }
    if (traceNorm < 1e-18) return {false, std::nullopt};  // cannot happen for a genuine failure

    // Affine slice tr(X) = 1: particular point plus the trace-null directions.
    std::vector<double> c0(span.size(), 0.0);
    for (size_t t = 0; t < span.size(); ++t) c0[t] = traces[t] / traceNorm;
    size_t pivot = 0;
    for (size_t t = 1; t < span.size(); ++t)
        if (std::abs(traces[t]) > std::abs(traces[pivot])) pivot = t;
    std::vector<std::vector<double>> nullDirs;
    for (size_t t = 0; t < span.size(); ++t) {
        if (t == pivot) continue;
        std::vector<double> dir(span.size(), 0.0);
        dir[t] = 1.0;
        dir[pivot] = -traces[t] / traces[pivot];
        nullDirs.push_back(std::move(dir));
    }
    AffinePSDProblem wit(static_cast<int>(nullDirs.size()));
    AffineBlock wblk;
    HermitianMatrix base = HermitianMatrix::zero(m);
    for (size_t t = 0; t < span.size(); ++t) base.addScaled(c0[t], span[t]);
    wblk.constant = base;
    for (const auto& dir : nullDirs) {
        HermitianMatrix f = HermitianMatrix::zero(m);
        for (size_t t = 0; t < span.size(); ++t) f.addScaled(dir[t], span[t]);
        wblk.coeff.push_back(std::move(f));
    }
    wit.addBlock(wblk);
    const FeasResult rw = solveMaxMargin(wit);
    HermitianMatrix witness = wblk.evaluate(rw.point);
    return {false, witness.mat()};
}

Level1Result level1PositivityNC(int n, double a0, const std::vector<double>& a) {
    if (static_cast<int>(a.size()) != n) throw InvalidInput("level1PositivityNC needs n coefficients");
    constexpr double tol = 1e-9;
    double sum = 0;
    for (double x : a) sum += std::abs(x);
    const double margin = a0 - sum;
    Level1Result r;
    r.margin = margin;
    if (margin > tol) {
        r.cls = Level1Class::StronglyPositive;
    } else if (margin >= -tol) {
        r.cls = Level1Class::Boundary;
    } else {
        r.cls = Level1Class::NotPositive;
        for (double x : a) r.witnessSigns.push_back(x > 0 ? -1 : 1);
    }
    return r;
}

bool graphDistinguishTR(int n) {
    if (n < 1) throw InvalidInput("graphDistinguishTR needs n >= 1");
    const int verts = n + 1;
    std::vector<int> pathDeg(static_cast<size_t>(verts), 2);
    pathDeg.front() = pathDeg.back() = 1;
    std::vector<int> starDeg(static_cast<size_t>(verts), 1);
    starDeg[0] = n;
    std::sort(pathDeg.begin(), pathDeg.end());
    std::sort(starDeg.begin(), starDeg.end());
    return pathDeg != starDeg;
}

double dualPairingCheck(int n, const std::vector<double>& a, const TensorElement& x) {
    if (static_cast<int>(a.size()) != 2 * n) throw InvalidInput("dualPairingCheck needs a vector of length 2n");
    if (x.system.kind != SystemKind::CubeVector || x.system.n != n)
        throw InvalidInput("dualPairingCheck needs an element of C^{2n}");
    if (x.k != 1) throw InvalidInput("dualPairingCheck is a level-1 pairing (k = 1)");
    const double s0 = a[0] + a[1];
    for (int i = 1; i < n; ++i)
        if (std::abs(a[static_cast<size_t>(2 * i)] + a[static_cast<size_t>(2 * i + 1)] - s0) > 1e-12)
            throw InvalidInput("functional violates the pair-sum membership constraints");
    double out = 0;
    for (int i = 0; i < 2 * n; ++i) out += a[static_cast<size_t>(i)] * x.coeff("e" + std::to_string(i + 1))(0, 0).real();
    return out;
}

}  // namespace nccube
