#include "nccube/mincone.hpp"

#include <algorithm>
#include <cmath>

#include "nccube/hermlin.hpp"
#include "nccube/rng.hpp"

namespace nccube {

namespace {

std::string hLabel(int i) { return "h" + std::to_string(i); }
std::string uLabel(int i) { return "u" + std::to_string(i); }

HermitianMatrix eigenClipBox(const HermitianMatrix& h) {
    const EighResult e = eigh(h);
    const int n = h.dim();
    ComplexMatrix r(n, n);
    for (int kk = 0; kk < n; ++kk) {
        const double lam = std::clamp(e.eigenvalues[static_cast<size_t>(kk)], -1.0, 1.0);
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const Complex vik = lam * e.eigenvectors(i, kk);
            for (int j = 0; j < n; ++j) r(i, j) += vik * std::conj(e.eigenvectors(j, kk));
        }
    }
    return HermitianMatrix(r);
}

// columns of the lowest eigenvalue cluster, reshaped to k x d
std::vector<ComplexMatrix> minEigCluster(const EighResult& e, int k, int d, double clusterTol) {
    std::vector<ComplexMatrix> out;
    const double lam0 = e.eigenvalues.front();
    for (size_t c = 0; c < e.eigenvalues.size() && e.eigenvalues[c] <= lam0 + clusterTol; ++c) {
        ComplexMatrix v(k, d);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < d; ++b) v(a, b) = e.eigenvectors(a * d + b, static_cast<int>(c));
        out.push_back(std::move(v));
    }
    return out;
}

// d lambda_min / dH for the A (x) H term at eigen-matrix V:
// T[b][b'] = sum_a conj(V[a][b']) (A V)[a][b]; Hermitian for Hermitian A.
ComplexMatrix repGradient(const ComplexMatrix& a, const std::vector<ComplexMatrix>& cluster) {
    const int d = cluster.front().cols();
    ComplexMatrix t(d, d);
    for (const auto& v : cluster) {
        const ComplexMatrix w = a * v;
        for (int b = 0; b < d; ++b)
            for (int b2 = 0; b2 < d; ++b2) {
                Complex s(0, 0);
                for (int r = 0; r < a.rows(); ++r) s += std::conj(v(r, b2)) * w(r, b);
                t(b, b2) += s;
            }
    }
    t *= Complex(1.0 / cluster.size(), 0);
    return t;
}

struct NCData {
    int n, k;
    HermitianMatrix a0;
    std::vector<HermitianMatrix> a;
};

NCData unpackNC(const TensorElement& x) {
    if (x.system.kind != SystemKind::NCCube) throw InvalidInput("expected an NC(n) element");
    if (!x.isHermitianElement()) throw InvalidInput("element must be Hermitian");
    NCData t{x.system.n, x.k, HermitianMatrix(x.coeff("1")), {}};
    for (int i = 1; i <= t.n; ++i) t.a.emplace_back(x.coeff(hLabel(i)));
    return t;
}

struct S2Data {
    int n, k;
    HermitianMatrix a0;
    std::vector<ComplexMatrix> a;  // coefficients of u_i
};

S2Data unpackS2(const TensorElement& x) {
    if (x.system.kind != SystemKind::UnitaryGen) throw InvalidInput("expected a unitary-generator element");
    if (!x.isHermitianElement()) throw InvalidInput("element must be Hermitian");
    S2Data t{x.system.n, x.k, HermitianMatrix(x.coeff("1")), {}};
    for (int i = 1; i <= t.n; ++i) t.a.push_back(x.coeff(uLabel(i)));
    return t;
}

HermitianMatrix assembleNCRep(const NCData& t, const std::vector<ComplexMatrix>& h, int d) {
    ComplexMatrix m = kron(t.a0.mat(), ComplexMatrix::identity(d));
    for (size_t i = 0; i < t.a.size(); ++i) m += kron(t.a[i].mat(), h[i]);
    return HermitianMatrix(m);
}

HermitianMatrix assembleS2Rep(const S2Data& t, const std::vector<ComplexMatrix>& u, int d) {
    ComplexMatrix m = kron(t.a0.mat(), ComplexMatrix::identity(d));
    for (size_t i = 0; i < t.a.size(); ++i) {
        m += kron(t.a[i], u[i]);
        m += kron(t.a[i].adjoint(), u[i].adjoint());
    }
    return HermitianMatrix(m);
}

void considerBest(MinSearchResult& best, double value, const std::vector<ComplexMatrix>& mats, int d, bool unitary) {
    if (value < best.bestValue) {
        best.bestValue = value;
        best.rep = RepTuple{d, unitary, mats};
    }
}

// enumerate tuples over a value grid
template <typename F>
void forEachTuple(int n, const std::vector<double>& grid, F&& fn) {
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    std::vector<double> vals(static_cast<size_t>(n), grid[0]);
    while (true) {
        fn(vals);
        int pos = 0;
        while (pos < n) {
            if (++idx[static_cast<size_t>(pos)] < grid.size()) {
                vals[static_cast<size_t>(pos)] = grid[idx[static_cast<size_t>(pos)]];
                break;
            }
            idx[static_cast<size_t>(pos)] = 0;
            vals[static_cast<size_t>(pos)] = grid[0];
            ++pos;
        }
        if (pos == n) break;
    }
}

}  // namespace

double evalNCRep(const TensorElement& x, const RepTuple& rep) {
    const NCData t = unpackNC(x);
    if (static_cast<int>(rep.mats.size()) != t.n) throw InvalidInput("representation arity mismatch");
    return minEig(assembleNCRep(t, rep.mats, rep.d));
}

double evalS2Rep(const TensorElement& x, const RepTuple& rep) {
    const S2Data t = unpackS2(x);
    if (static_cast<int>(rep.mats.size()) != t.n) throw InvalidInput("representation arity mismatch");
    return minEig(assembleS2Rep(t, rep.mats, rep.d));
}

MinSearchResult minViolationSearch(const TensorElement& x, const MinSearchOptions& opts) {
    const NCData t = unpackNC(x);
    const int n = t.n, k = t.k;
    MinSearchResult best;
    best.bestValue = std::numeric_limits<double>::infinity();

    // deterministic stage: sign tuples always, the commuting grid for n <= 3
    const auto scalarTuple = [&](const std::vector<double>& g) {
        HermitianMatrix m = t.a0;
        for (int i = 0; i < n; ++i) m.addScaled(g[static_cast<size_t>(i)], t.a[static_cast<size_t>(i)]);
        std::vector<ComplexMatrix> mats;
        for (double v : g) {
            ComplexMatrix h(1, 1);
            h(0, 0) = v;
            mats.push_back(std::move(h));
        }
        considerBest(best, minEig(m), mats, 1, false);
    };
    forEachTuple(n, {-1.0, 1.0}, scalarTuple);
    if (n <= 3) forEachTuple(n, {-1.0, -0.5, 0.0, 0.5, 1.0}, scalarTuple);
    if (opts.stopAtViolation && best.bestValue < -opts.violationTol) {
        best.violation = true;
        return best;
    }

    for (int d = 1; d <= opts.dMax; ++d) {
        for (int r = 0; r < opts.restarts; ++r) {
            Rng rng = Rng::derived(opts.seed, static_cast<uint64_t>((d - 1) * opts.restarts + r));
            std::vector<ComplexMatrix> h;
            for (int i = 0; i < n; ++i) h.push_back(eigenClipBox(rng.gaussianHermitian(d)).mat());
            double f = minEig(assembleNCRep(t, h, d));
            considerBest(best, f, h, d, false);

            for (int step = 0; step < opts.gradientSteps; ++step) {
                const EighResult e = eigh(assembleNCRep(t, h, d));
                const auto cluster = minEigCluster(e, k, d, 1e-8);
                std::vector<ComplexMatrix> grads;
                for (int i = 0; i < n; ++i) grads.push_back(repGradient(t.a[static_cast<size_t>(i)].mat(), cluster));

                double alpha = 0.5;
                bool improved = false;
                for (int bt = 0; bt < 20 && !improved; ++bt, alpha *= 0.5) {
                    std::vector<ComplexMatrix> cand;
                    cand.reserve(h.size());
                    for (int i = 0; i < n; ++i) {
                        ComplexMatrix step_i = h[static_cast<size_t>(i)] - grads[static_cast<size_t>(i)] * Complex(alpha, 0);
                        cand.push_back(eigenClipBox(HermitianMatrix(step_i)).mat());
                    }
                    const double fc = minEig(assembleNCRep(t, cand, d));
                    if (fc < f - 1e-14) {
                        h = std::move(cand);
                        f = fc;
                        improved = true;
                    }
                }
                considerBest(best, f, h, d, false);
                if (!improved) break;
                if (opts.stopAtViolation && f < -opts.violationTol) break;
            }
            if (opts.stopAtViolation && best.bestValue < -opts.violationTol) {
                best.violation = true;
                return best;
            }
        }
    }
    best.violation = best.bestValue < -opts.violationTol;
    return best;
}

MinSearchResult s2MinSearch(const TensorElement& x, const MinSearchOptions& opts) {
    const S2Data t = unpackS2(x);
    const int n = t.n, k = t.k;
    MinSearchResult best;
    best.bestValue = std::numeric_limits<double>::infinity();

    // deterministic stage: scalar unitaries on a phase grid
    if (n <= 3) {
        std::vector<double> phases;
        for (int i = 0; i < 24; ++i) phases.push_back(2.0 * M_PI * i / 24);
        forEachTuple(n, phases, [&](const std::vector<double>& th) {
            ComplexMatrix m = t.a0.mat();
            std::vector<ComplexMatrix> mats;
            for (int i = 0; i < n; ++i) {
                const Complex z(std::cos(th[static_cast<size_t>(i)]), std::sin(th[static_cast<size_t>(i)]));
                m += t.a[static_cast<size_t>(i)] * z;
                m += t.a[static_cast<size_t>(i)].adjoint() * std::conj(z);
                ComplexMatrix u(1, 1);
                u(0, 0) = z;
                mats.push_back(std::move(u));
            }
            considerBest(best, minEig(HermitianMatrix(m)), mats, 1, true);
        });
    }
    if (opts.stopAtViolation && best.bestValue < -opts.violationTol) {
        best.violation = true;
        return best;
    }

    for (int d = 1; d <= opts.dMax; ++d) {
        for (int r = 0; r < opts.restarts; ++r) {
            Rng rng = Rng::derived(opts.seed, 0x75000000ULL + static_cast<uint64_t>((d - 1) * opts.restarts + r));
            std::vector<ComplexMatrix> u;
            for (int i = 0; i < n; ++i) u.push_back(unitaryExp(rng.gaussianHermitian(d), 1.0));
            double f = minEig(assembleS2Rep(t, u, d));
            considerBest(best, f, u, d, true);

            for (int step = 0; step < opts.gradientSteps; ++step) {
                const EighResult e = eigh(assembleS2Rep(t, u, d));
                const auto cluster = minEigCluster(e, k, d, 1e-8);
                // anti-Hermitian descent directions N_i = antiherm(T_i U_i)
                std::vector<HermitianMatrix> dirs;  // stored as Hermitian via N = i H
                for (int i = 0; i < n; ++i) {
                    const ComplexMatrix ti = repGradient(t.a[static_cast<size_t>(i)], cluster);
                    const ComplexMatrix m = ti * u[static_cast<size_t>(i)];
                    ComplexMatrix nAnti = (m - m.adjoint()) * Complex(0.5, 0);
                    nAnti *= Complex(0, -1);  // H with N = iH
                    dirs.emplace_back(nAnti);
                }

                double alpha = 0.5;
                bool improved = false;
                for (int bt = 0; bt < 20 && !improved; ++bt, alpha *= 0.5) {
                    std::vector<ComplexMatrix> cand;
                    for (int i = 0; i < n; ++i)
                        cand.push_back(u[static_cast<size_t>(i)] * unitaryExp(dirs[static_cast<size_t>(i)], alpha));
                    const double fc = minEig(assembleS2Rep(t, cand, d));
                    if (fc < f - 1e-14) {
                        u = std::move(cand);
                        f = fc;
                        improved = true;
                    }
                }
                considerBest(best, f, u, d, true);
                if (!improved) break;
                if (opts.stopAtViolation && f < -opts.violationTol) break;
            }
            if (opts.stopAtViolation && best.bestValue < -opts.violationTol) {
                best.violation = true;
                return best;
            }
        }
    }
    best.violation = best.bestValue < -opts.violationTol;
    return best;
}

double jointNumericalRadiusLB(const ComplexMatrix& a1, const ComplexMatrix& a2, const MinSearchOptions& opts) {
    if (!a1.isSquare() || !a2.isSquare() || a1.rows() != a2.rows())
        throw InvalidInput("jointNumericalRadiusLB needs square matrices of equal size");
    const int k = a1.rows();
    TensorElement x = TensorElement::zero({SystemKind::UnitaryGen, 2}, k);
    x.setCoeff("1", ComplexMatrix(k, k));
    x.setCoeff("u1", a1);
    x.setCoeff("u2", a2);
    MinSearchOptions o = opts;
    o.stopAtViolation = false;
    const MinSearchResult r = s2MinSearch(x, o);
    return -0.5 * r.bestValue;
}

}  // namespace nccube
