#include "nccube/sweeps.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "nccube/hermlin.hpp"
#include "nccube/maxcone.hpp"
#include "nccube/mincone.hpp"
#include "nccube/riesz.hpp"
#include "nccube/rng.hpp"
#include "nccube/wepchecks.hpp"

namespace nccube {

namespace {

void parallelFor(int count, int threads, const std::function<void(int)>& work) {
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

std::string statusStr(FeasStatus s) {
    switch (s) {
        case FeasStatus::Feasible:
            return "feasible";
        case FeasStatus::Infeasible:
            return "infeasible";
        case FeasStatus::Undecided:
            return "undecided";
    }
    return "?";
}

MaxOptions sweepMaxOptions(uint64_t seed) {
    MaxOptions o;
    o.seed = seed;
    o.marginResolution = 1e-3;
    o.probeWindow = 150;
    return o;
}

SweepResult agreementSweep(int trials, uint64_t seed, int threads) {
    struct Row {
        int n, k;
        std::string source;
        std::array<FeasStatus, 4> status;
        std::array<double, 4> margin;
        bool contradiction;
    };
    std::vector<Row> rows(static_cast<size_t>(trials));
    const int combos[6][2] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
    parallelFor(trials, threads, [&](int t) {
        const int n = combos[t % 6][0];
        const int k = combos[t % 6][1];
        const uint64_t s = seed + static_cast<uint64_t>(t) * 7919;
        const bool pushforward = t % 4 == 0;
        const TensorElement x = pushforward ? randomMaxPositive(n, k, s).element : randomNCElement(n, k, s);
        const RouteReport rep = crossValidateRoutes(x, sweepMaxOptions(s));
        Row& r = rows[static_cast<size_t>(t)];
        r.n = n;
        r.k = k;
        r.source = pushforward ? "pushforward" : "random";
        for (size_t i = 0; i < 4; ++i) {
            r.status[i] = rep.results[i].feas.status;
            r.margin[i] = rep.results[i].feas.margin;
        }
        r.contradiction = rep.contradiction;
    });

    SweepResult out;
    out.suite = "agreement";
    std::ostringstream csv;
    csv << "trial,n,k,source,tridiag_status,tridiag_margin,arrow_status,arrow_margin,"
           "diagonal_status,diagonal_margin,qn_status,qn_margin,agreement\n";
    out.stats.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t << "," << r.n << "," << r.k << "," << r.source;
        for (size_t i = 0; i < 4; ++i) csv << "," << statusStr(r.status[i]) << "," << formatDouble(r.margin[i]);
        csv << "," << (r.contradiction ? 0 : 1) << "\n";
        if (r.contradiction)
            ++out.stats.contradictions;
        else
            ++out.stats.agreements;
    }
    out.csv = csv.str();
    return out;
}

SweepResult nc2Sweep(int trials, uint64_t seed, int threads) {
    struct Row {
        int k, attempts;
        FeasStatus maxStatus;
        double maxMargin;
        bool violation;
        double minBest;
        bool agree, contradiction;
    };
    std::vector<Row> rows(static_cast<size_t>(trials));
    parallelFor(trials, threads, [&](int t) {
        const int k = 1 + t % 3;
        Row& r = rows[static_cast<size_t>(t)];
        r.k = k;
        // resample until the max decision margin is strictly away from zero
        MaxConeResult mr;
        TensorElement x;
        int attempt = 0;
        for (; attempt < 64; ++attempt) {
            const uint64_t s = seed + static_cast<uint64_t>(t) * 104729 + static_cast<uint64_t>(attempt);
            x = randomNCElement(2, k, s);
            mr = maxMembership(x, MaxRoute::Diagonal, sweepMaxOptions(s));
            if (mr.feas.status != FeasStatus::Undecided && std::abs(mr.feas.margin) > 1e-3) break;
        }
        r.attempts = attempt + 1;
        r.maxStatus = mr.feas.status;
        r.maxMargin = mr.feas.margin;
        MinSearchOptions mo;
        mo.dMax = 6;
        mo.restarts = 32;
        mo.seed = seed + static_cast<uint64_t>(t) * 31;
        const MinSearchResult sr = minViolationSearch(x, mo);
        r.violation = sr.violation;
        r.minBest = sr.bestValue;
        const bool maxFeasible = r.maxStatus == FeasStatus::Feasible;
        r.agree = maxFeasible == !sr.violation;
        r.contradiction = maxFeasible && sr.violation;
    });

    SweepResult out;
    out.suite = "nc2";
    std::ostringstream csv;
    csv << "trial,k,attempts,max_status,max_margin,min_violation,min_best_value,agreement\n";
    out.stats.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t << "," << r.k << "," << r.attempts << "," << statusStr(r.maxStatus) << "," << formatDouble(r.maxMargin)
            << "," << (r.violation ? 1 : 0) << "," << formatDouble(r.minBest) << "," << (r.agree ? 1 : 0) << "\n";
        ++out.stats.decided;
        if (r.agree)
            ++out.stats.agreements;
        else if (r.contradiction)
            ++out.stats.contradictions;
        else
            ++out.stats.searchShortfalls;
    }
    out.csv = csv.str();
    return out;
}

SweepResult rieszSweep(int trials, uint64_t seed, int threads) {
    struct Row {
        int k, m, attempts;
        bool fullFound;
        double fullMargin;
        bool diagFound;
        bool implicationOk;
    };
    std::vector<Row> rows(static_cast<size_t>(trials));
    parallelFor(trials, threads, [&](int t) {
        Row& r = rows[static_cast<size_t>(t)];
        r.k = 1 + t % 4;
        r.m = 1 + (t / 4) % 2;
        SchemeSolveResult fullSolve;
        HermitianMatrix a1, a2;
        std::vector<HermitianMatrix> b;
        int attempt = 0;
        for (; attempt < 64; ++attempt) {
            Rng rng = Rng::derived(seed, static_cast<uint64_t>(t) * 131071 + static_cast<uint64_t>(attempt));
            std::vector<double> d1, d2;
            for (int i = 0; i < r.k; ++i) {
                d1.push_back(0.8 + 1.6 * rng.uniform());
                d2.push_back(0.8 + 1.6 * rng.uniform());
            }
            a1 = HermitianMatrix::diagonal(d1);
            a2 = HermitianMatrix::diagonal(d2);
            b.clear();
            for (int i = 0; i < r.m; ++i) {
                std::vector<double> db;
                for (int j = 0; j < r.k; ++j) db.push_back(0.7 * rng.uniformSym());
                b.push_back(HermitianMatrix::diagonal(db));
            }
            fullSolve = solveScheme(a1, a2, b, SubalgebraSpec::fullCached(r.k), 1e-6,
                                    seed + static_cast<uint64_t>(t));
            if (fullSolve.found() && fullSolve.feas.margin > 1e-3) break;
        }
        r.attempts = attempt + 1;
        r.fullFound = fullSolve.found();
        r.fullMargin = fullSolve.feas.margin;
        const SchemeSolveResult diagSolve =
            solveScheme(a1, a2, b, SubalgebraSpec::diagonal(r.k), 1e-6, seed + static_cast<uint64_t>(t) + 1);
        r.diagFound = diagSolve.found();
        r.implicationOk = !(r.fullFound && r.fullMargin > 1e-3) || r.diagFound;
    });

    SweepResult out;
    out.suite = "riesz";
    std::ostringstream csv;
    csv << "trial,k,m,attempts,full_found,full_margin,diag_found,implication_ok\n";
    out.stats.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t << "," << r.k << "," << r.m << "," << r.attempts << "," << (r.fullFound ? 1 : 0) << ","
            << formatDouble(r.fullMargin) << "," << (r.diagFound ? 1 : 0) << "," << (r.implicationOk ? 1 : 0) << "\n";
        ++out.stats.decided;
        if (r.implicationOk)
            ++out.stats.agreements;
        else
            ++out.stats.implicationFailures;
    }
    out.csv = csv.str();
    return out;
}

SweepResult thstSweep(int trials, uint64_t seed, int threads) {
    struct Row {
        double searchValue;
        bool violation, found;
        double splitMargin;
        bool contradiction;
    };
    std::vector<Row> rows(static_cast<size_t>(trials));
    parallelFor(trials, threads, [&](int t) {
        Rng rng = Rng::derived(seed, static_cast<uint64_t>(t) * 257 + 11);
        const double scale = 0.08 + 0.45 * rng.uniform();
        ComplexMatrix a1 = rng.gaussianMatrix(2, 2);
        a1 *= Complex(scale / std::sqrt(2.0), 0);
        ComplexMatrix a2 = rng.gaussianMatrix(2, 2);
        a2 *= Complex(scale / std::sqrt(2.0), 0);
        MinSearchOptions so;
        so.dMax = 3;
        so.restarts = 8;
        so.seed = seed + static_cast<uint64_t>(t);
        const S2InstanceCheck c = s2CheckInstance(a1, a2, so);
        rows[static_cast<size_t>(t)] = Row{c.minSearchValue, c.violationFound, c.decompositionFound,
                                           c.decompositionMargin, c.contradiction};
    });

    SweepResult out;
    out.suite = "thst";
    std::ostringstream csv;
    csv << "trial,search_value,violation,split_found,split_margin,contradiction\n";
    out.stats.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t << "," << formatDouble(r.searchValue) << "," << (r.violation ? 1 : 0) << "," << (r.found ? 1 : 0)
            << "," << formatDouble(r.splitMargin) << "," << (r.contradiction ? 1 : 0) << "\n";
        ++out.stats.decided;
        if (r.contradiction)
            ++out.stats.contradictions;
        else if (!r.found && !r.violation)
            ++out.stats.searchShortfalls;
        else
            ++out.stats.agreements;
    }
    out.csv = csv.str();
    return out;
}

}  // namespace

SweepResult runSweep(const std::string& suite, int trials, uint64_t seed, int threads) {
    if (trials < 1) throw InvalidInput("sweep needs at least one trial");
    SweepResult out;
    if (suite == "agreement")
        out = agreementSweep(trials, seed, threads);
    else if (suite == "nc2")
        out = nc2Sweep(trials, seed, threads);
    else if (suite == "riesz")
        out = rieszSweep(trials, seed, threads);
    else if (suite == "thst")
        out = thstSweep(trials, seed, threads);
    else
        throw InvalidInput("unknown sweep suite: " + suite + " (expected agreement, nc2, riesz or thst)");

    Json summary;
    summary["format"] = 1;
    summary["command"] = "sweep";
    summary["suite"] = out.suite;
    summary["trials"] = trials;
    summary["seed"] = seed;
    Json stats;
    stats["decided"] = out.stats.decided;
    stats["agreements"] = out.stats.agreements;
    stats["contradictions"] = out.stats.contradictions;
    stats["search_shortfalls"] = out.stats.searchShortfalls;
    stats["implication_failures"] = out.stats.implicationFailures;
    summary["stats"] = std::move(stats);
    summary["wall_time_s"] = 0.0;
    out.summary = std::move(summary);
    return out;
}

}  // namespace nccube
