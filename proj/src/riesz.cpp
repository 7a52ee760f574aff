#include "nccube/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

#include "nccube/hermlin.hpp"

namespace nccube {

SchemeCheck verifyScheme(const RieszScheme& s) {
    if (s.b.size() != s.x.size()) throw InvalidInput("scheme needs matching b and x lists");
    const int k = s.a1.dim();
    if (s.a2.dim() != k) throw InvalidInput("scheme dimension mismatch");
    HermitianMatrix sum = HermitianMatrix::zero(k);
    for (const auto& xi : s.x) {
        if (xi.dim() != k) throw InvalidInput("scheme dimension mismatch");
        sum += xi;
    }
    double worst = std::numeric_limits<double>::infinity();
    HermitianMatrix g1 = s.a1;
    g1 -= sum;
    worst = std::min(worst, minEig(g1) - s.margin);
    HermitianMatrix g2 = s.a2;
    g2 -= sum;
    worst = std::min(worst, minEig(g2) - s.margin);
    for (size_t i = 0; i < s.x.size(); ++i) {
        if (s.b[i].dim() != k) throw InvalidInput("scheme dimension mismatch");
        HermitianMatrix gi = s.x[i];
        gi -= s.b[i];
        worst = std::min(worst, minEig(gi) - s.margin);
        worst = std::min(worst, minEig(s.x[i]) - s.margin);
    }
    return {worst >= 0.0, worst};
}

namespace {

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

// Orthonormal complex basis for span membership / closure tests.
std::vector<ComplexMatrix> orthonormaliseComplex(std::vector<ComplexMatrix> cand) {
    std::vector<ComplexMatrix> out;
    for (auto& m : cand) {
        for (const auto& o : out) {
            Complex ip(0, 0);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) ip += std::conj(o(i, j)) * m(i, j);
            m -= o * ip;
        }
        const double nrm = m.frobeniusNorm();
        if (nrm > 1e-9) {
            m *= Complex(1.0 / nrm, 0);
            out.push_back(std::move(m));
        }
    }
    return out;
}

double complexSpanResidual(const std::vector<ComplexMatrix>& onb, const ComplexMatrix& x) {
    ComplexMatrix r = x;
    for (const auto& o : onb) {
        Complex ip(0, 0);
        for (int i = 0; i < r.rows(); ++i)
            for (int j = 0; j < r.cols(); ++j) ip += std::conj(o(i, j)) * r(i, j);
        r -= o * ip;
    }
    return r.frobeniusNorm();
}

}  // namespace

SubalgebraSpec::SubalgebraSpec(int k, std::vector<ComplexMatrix> basis) : k_(k), basis_(std::move(basis)) {
    const std::vector<ComplexMatrix> onb = orthonormaliseComplex(basis_);
    // unital
    if (complexSpanResidual(onb, ComplexMatrix::identity(k_)) > 1e-10 * std::sqrt(static_cast<double>(k_)))
        throw InvalidInput("subalgebra span does not contain the identity");
    // *-closed and product-closed
    for (const auto& a : basis_) {
        if (complexSpanResidual(onb, a.adjoint()) > 1e-10 * (1 + a.frobeniusNorm()))
            throw InvalidInput("subalgebra span is not adjoint-closed");
        for (const auto& b : basis_) {
            const ComplexMatrix ab = a * b;
            if (complexSpanResidual(onb, ab) > 1e-10 * (1 + ab.frobeniusNorm()))
                throw InvalidInput("subalgebra span is not closed under products");
        }
    }
    std::vector<HermitianMatrix> cand;
    for (const auto& b : basis_) {
        cand.emplace_back(b);
        ComplexMatrix ib = b;
        ib *= Complex(0, 1);
        cand.emplace_back(ib);
    }
    hermBasis_ = orthonormalise(std::move(cand));
}

SubalgebraSpec SubalgebraSpec::full(int k) {
    std::vector<ComplexMatrix> basis;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            ComplexMatrix e(k, k);
            e(i, j) = 1.0;
            basis.push_back(std::move(e));
        }
    return SubalgebraSpec(k, std::move(basis));
}

const SubalgebraSpec& SubalgebraSpec::fullCached(int k) {
    static std::mutex mu;
    static std::map<int, SubalgebraSpec> cache;
    std::lock_guard<std::mutex> guard(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, SubalgebraSpec::full(k)).first;
    return it->second;
}

SubalgebraSpec SubalgebraSpec::scalars(int k) { return SubalgebraSpec(k, {ComplexMatrix::identity(k)}); }

SubalgebraSpec SubalgebraSpec::diagonal(int k) {
    std::vector<ComplexMatrix> basis;
    for (int i = 0; i < k; ++i) {
        ComplexMatrix e(k, k);
        e(i, i) = 1.0;
        basis.push_back(std::move(e));
    }
    return SubalgebraSpec(k, std::move(basis));
}

SubalgebraSpec SubalgebraSpec::blockDiagonal(const std::vector<int>& blockSizes) {
    int k = 0;
    for (int s : blockSizes) {
        if (s < 1) throw InvalidInput("block sizes must be positive");
        k += s;
    }
    std::vector<ComplexMatrix> basis;
    int off = 0;
    for (int s : blockSizes) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                ComplexMatrix e(k, k);
                e(off + i, off + j) = 1.0;
                basis.push_back(std::move(e));
            }
        off += s;
    }
    return SubalgebraSpec(k, std::move(basis));
}

SubalgebraSpec SubalgebraSpec::permutationSpan(int k, const std::vector<std::vector<int>>& generators) {
    std::set<std::vector<int>> group;
    std::vector<int> id(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) id[static_cast<size_t>(i)] = i;
    group.insert(id);
    std::vector<std::vector<int>> frontier = {id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& gen : generators) {
                if (static_cast<int>(gen.size()) != k) throw InvalidInput("permutation length mismatch");
                std::vector<int> prod(static_cast<size_t>(k));
                for (int i = 0; i < k; ++i) prod[static_cast<size_t>(i)] = gen[static_cast<size_t>(g[static_cast<size_t>(i)])];
                if (group.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
        if (group.size() > 40320) throw InvalidInput("permutation group too large");
    }
    std::vector<ComplexMatrix> basis;
    for (const auto& g : group) {
        ComplexMatrix p(k, k);
        for (int i = 0; i < k; ++i) p(g[static_cast<size_t>(i)], i) = 1.0;
        basis.push_back(std::move(p));
    }
    return SubalgebraSpec(k, std::move(basis));
}

HermitianMatrix SubalgebraSpec::projectHermitian(const HermitianMatrix& x) const {
    HermitianMatrix out = HermitianMatrix::zero(k_);
    for (const auto& h : hermBasis_) out.addScaled(realInner(h, x), h);
    return out;
}

bool SubalgebraSpec::containsHermitian(const HermitianMatrix& x, double tol) const {
    HermitianMatrix r = projectHermitian(x);
    r -= x;
    return r.frobeniusNorm() <= tol * (1.0 + x.frobeniusNorm());
}

HermitianMatrix SubalgebraSpec::assemble(const std::vector<double>& coords, size_t offset) const {
    HermitianMatrix out = HermitianMatrix::zero(k_);
    for (size_t t = 0; t < hermBasis_.size(); ++t) out.addScaled(coords[offset + t], hermBasis_[t]);
    return out;
}

AffinePSDProblem buildSchemeProblem(const HermitianMatrix& a1, const HermitianMatrix& a2,
                                    const std::vector<HermitianMatrix>& b,
                                    const std::vector<HermitianMatrix>& coordBasis) {
    const int k = a1.dim();
    const int m = static_cast<int>(b.size());
    const int dimH = static_cast<int>(coordBasis.size());
    const int d = m * dimH;
    AffinePSDProblem p(d);

    const HermitianMatrix zero = HermitianMatrix::zero(k);
    const auto coeffFor = [&](int var, double sign) {
        std::vector<HermitianMatrix> coeff(static_cast<size_t>(d), zero);
        for (int t = 0; t < dimH; ++t) {
            HermitianMatrix f = coordBasis[static_cast<size_t>(t)];
            f *= sign;
            coeff[static_cast<size_t>(var * dimH + t)] = std::move(f);
        }
        return coeff;
    };

    AffineBlock top1;
    top1.constant = a1;
    top1.coeff.assign(static_cast<size_t>(d), zero);
    AffineBlock top2;
    top2.constant = a2;
    top2.coeff.assign(static_cast<size_t>(d), zero);
    for (int i = 0; i < m; ++i)
        for (int t = 0; t < dimH; ++t) {
            HermitianMatrix f = coordBasis[static_cast<size_t>(t)];
            f *= -1.0;
            top1.coeff[static_cast<size_t>(i * dimH + t)] = f;
            top2.coeff[static_cast<size_t>(i * dimH + t)] = std::move(f);
        }
    p.addBlock(std::move(top1));
    p.addBlock(std::move(top2));

    for (int i = 0; i < m; ++i) {
        AffineBlock over;
        over.constant = b[static_cast<size_t>(i)];
        over.constant *= -1.0;
        over.coeff = coeffFor(i, 1.0);
        p.addBlock(std::move(over));
        AffineBlock pos;
        pos.constant = zero;
        pos.coeff = coeffFor(i, 1.0);
        p.addBlock(std::move(pos));
    }
    return p;
}

SchemeSolveResult solveScheme(const HermitianMatrix& a1, const HermitianMatrix& a2,
                              const std::vector<HermitianMatrix>& b, const SubalgebraSpec& algebra,
                              double strictTol, uint64_t seed) {
    const int k = algebra.k();
    if (a1.dim() != k || a2.dim() != k) throw InvalidInput("scheme data size mismatch with algebra");
    if (!algebra.containsHermitian(a1) || !algebra.containsHermitian(a2))
        throw InvalidInput("scheme data a1/a2 outside the subalgebra span");
    for (const auto& bi : b) {
        if (bi.dim() != k) throw InvalidInput("scheme data size mismatch with algebra");
        if (!algebra.containsHermitian(bi)) throw InvalidInput("scheme datum b_i outside the subalgebra span");
    }

    const AffinePSDProblem p = buildSchemeProblem(a1, a2, b, algebra.hermitianBasis());
    SolveOptions opts;
    opts.strictTol = strictTol;
    opts.seed = seed;
    SchemeSolveResult out;
    out.feas = solveMaxMargin(p, opts);
    if (out.feas.status == FeasStatus::Feasible) {
        RieszScheme s;
        s.a1 = a1;
        s.a2 = a2;
        s.b = b;
        const int dimH = algebra.hermDim();
        for (size_t i = 0; i < b.size(); ++i) s.x.push_back(algebra.assemble(out.feas.point, i * static_cast<size_t>(dimH)));
        // certified margin less a re-verification slack
        s.margin = out.feas.margin - 1e-9 * (1.0 + std::abs(out.feas.margin));
        out.scheme = std::move(s);
    }
    return out;
}

InterpolationResult trInterpolate(const std::vector<HermitianMatrix>& aList, const std::vector<HermitianMatrix>& bList,
                                  const SubalgebraSpec& algebra, double strictTol, uint64_t seed) {
    const int k = algebra.k();
    if (aList.empty() || bList.empty()) throw InvalidInput("trInterpolate needs nonempty bound lists");
    for (const auto& m : aList)
        if (m.dim() != k) throw InvalidInput("upper bound size mismatch with algebra");
    for (const auto& m : bList)
        if (m.dim() != k) throw InvalidInput("lower bound size mismatch with algebra");

    const int dimH = algebra.hermDim();
    AffinePSDProblem p(dimH);
    for (const auto& a : aList) {
        AffineBlock blk;
        blk.constant = a;
        for (int t = 0; t < dimH; ++t) {
            HermitianMatrix f = algebra.hermitianBasis()[static_cast<size_t>(t)];
            f *= -1.0;
            blk.coeff.push_back(std::move(f));
        }
        p.addBlock(std::move(blk));
    }
    for (const auto& b : bList) {
        AffineBlock blk;
        blk.constant = b;
        blk.constant *= -1.0;
        blk.coeff = algebra.hermitianBasis();
        p.addBlock(std::move(blk));
    }
    SolveOptions opts;
    opts.strictTol = strictTol;
    opts.seed = seed;
    InterpolationResult out;
    out.feas = solveMaxMargin(p, opts);
    if (out.feas.status == FeasStatus::Feasible) out.y = algebra.assemble(out.feas.point);
    return out;
}

}  // namespace nccube
