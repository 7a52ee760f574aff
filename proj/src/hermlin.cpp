#include "nccube/hermlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nccube {

namespace {

double offDiagNorm(const ComplexMatrix& a) {
    double s = 0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = 0; q < a.cols(); ++q)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

}  // namespace

EighResult eigh(const HermitianMatrix& m) {
    EighResult res;
    eighInto(m, res.eigenvalues, res.eigenvectors);
    return res;
}

void eighInto(const HermitianMatrix& m, std::vector<double>& eigenvalues, ComplexMatrix& eigenvectors) {
    const int n = m.dim();
    if (n < 1) throw InvalidInput("eigh needs dim >= 1");
    ComplexMatrix a = m.mat();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double normF = a.frobeniusNorm();
    const double tol = 1e-13 * normF;
    constexpr int kMaxSweeps = 60;

    bool converged = (n == 1) || offDiagNorm(a) <= tol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double beta = std::abs(apq);
                if (beta <= 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                // Phase factor e with apq = beta * e; rotation acts in the
                // (p,q) plane as J = [[c, -s*e],[s*conj(e), c]].
                const Complex e = apq / beta;
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double tau = (alpha - gamma) / (2.0 * beta);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex se = s * e;
                const Complex sec = std::conj(se);

                // columns p,q of A: A <- A J
                for (int r = 0; r < n; ++r) {
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp + sec * arq;
                    a(r, q) = -se * arp + c * arq;
                }
                // rows p,q of A: A <- J† A
                for (int r = 0; r < n; ++r) {
                    const Complex apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr + se * aqr;
                    a(q, r) = -sec * apr + c * aqr;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                // accumulate V <- V J
                for (int r = 0; r < n; ++r) {
                    const Complex vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp + sec * vrq;
                    v(r, q) = -se * vrp + c * vrq;
                }
            }
        }
        converged = offDiagNorm(a) <= tol;
    }
    if (!converged) throw NumericalFailure("Jacobi eigensolver did not converge within 60 sweeps");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    eigenvalues.resize(static_cast<size_t>(n));
    if (eigenvectors.rows() != n || eigenvectors.cols() != n) eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        eigenvalues[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]).real();
        for (int i = 0; i < n; ++i) eigenvectors(i, j) = v(i, order[static_cast<size_t>(j)]);
    }
}

double minEig(const HermitianMatrix& m) { return eigh(m).eigenvalues.front(); }

double maxEig(const HermitianMatrix& m) { return eigh(m).eigenvalues.back(); }

HermitianMatrix psdProject(const HermitianMatrix& m) { return eigenFloorProject(m, 0.0); }

HermitianMatrix eigenFloorProject(const HermitianMatrix& m, double floor) {
    const EighResult e = eigh(m);
    const int n = m.dim();
    ComplexMatrix r(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = std::max(e.eigenvalues[static_cast<size_t>(k)], floor);
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const Complex vik = e.eigenvectors(i, k);
            if (vik == Complex(0, 0)) continue;
            const Complex w = lam * vik;
            for (int j = 0; j < n; ++j) r(i, j) += w * std::conj(e.eigenvectors(j, k));
        }
    }
    return HermitianMatrix(r);
}

double opNorm(const ComplexMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const HermitianMatrix gram(a.adjoint() * a);
    return std::sqrt(std::max(0.0, maxEig(gram)));
}

namespace {

double radiusObjective(const ComplexMatrix& a, double theta) {
    const Complex phase(std::cos(theta), std::sin(theta));
    ComplexMatrix w = a;
    w *= phase;
    return maxEig(HermitianMatrix(w));  // symmetrisation gives (e^{it}A + e^{-it}A†)/2
}

}  // namespace

double numericalRadius(const ComplexMatrix& a, int grid, double refineTol) {
    if (!a.isSquare()) throw InvalidInput("numericalRadius needs a square matrix");
    if (grid < 3) throw InvalidInput("numericalRadius grid too small");
    if (a.frobeniusNorm() == 0.0) return 0.0;

    const double twoPi = 2.0 * M_PI;
    double best = -1e300;
    int bestIdx = 0;
    for (int i = 0; i < grid; ++i) {
        const double g = radiusObjective(a, twoPi * i / grid);
        if (g > best) {
            best = g;
            bestIdx = i;
        }
    }
    // Golden-section refinement around the best grid point.
    double lo = twoPi * (bestIdx - 1) / grid;
    double hi = twoPi * (bestIdx + 1) / grid;
    const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invPhi * (hi - lo);
    double x2 = lo + invPhi * (hi - lo);
    double f1 = radiusObjective(a, x1);
    double f2 = radiusObjective(a, x2);
    while (hi - lo > refineTol) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invPhi * (hi - lo);
            f1 = radiusObjective(a, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invPhi * (hi - lo);
            f2 = radiusObjective(a, x2);
        }
    }
    return std::max(best, std::max(f1, f2));
}

HermitianMatrix invSqrt(const HermitianMatrix& m, double floor) {
    if (floor <= 0) throw InvalidInput("invSqrt floor must be positive");
    const EighResult e = eigh(m);
    if (e.eigenvalues.front() <= floor)
        throw InvalidInput("invSqrt: matrix is not strongly positive above the floor");
    const int n = m.dim();
    ComplexMatrix r(n, n);
    for (int k = 0; k < n; ++k) {
        const double w = 1.0 / std::sqrt(e.eigenvalues[static_cast<size_t>(k)]);
        for (int i = 0; i < n; ++i) {
            const Complex vik = w * e.eigenvectors(i, k);
            for (int j = 0; j < n; ++j) r(i, j) += vik * std::conj(e.eigenvectors(j, k));
        }
    }
    return HermitianMatrix(r);
}

ComplexMatrix unitaryExp(const HermitianMatrix& h, double s) {
    const EighResult e = eigh(h);
    const int n = h.dim();
    ComplexMatrix r(n, n);
    for (int k = 0; k < n; ++k) {
        const double phi = s * e.eigenvalues[static_cast<size_t>(k)];
        const Complex w(std::cos(phi), std::sin(phi));
        for (int i = 0; i < n; ++i) {
            const Complex vik = w * e.eigenvectors(i, k);
            for (int j = 0; j < n; ++j) r(i, j) += vik * std::conj(e.eigenvectors(j, k));
        }
    }
    return r;
}

}  // namespace nccube
