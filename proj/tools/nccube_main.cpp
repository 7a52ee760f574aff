// Command-line interface: strong-positivity checks for noncommutative-cube
// tensor elements, Riesz scheme solves, radius-split decompositions, kernel
// listings, certificate verification and experiment sweeps.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "nccube/hermlin.hpp"
#include "nccube/io.hpp"
#include "nccube/maxcone.hpp"
#include "nccube/mincone.hpp"
#include "nccube/riesz.hpp"
#include "nccube/sweeps.hpp"
#include "nccube/wepchecks.hpp"

using namespace nccube;

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInputError = 3;
constexpr int kExitNumericalError = 4;

struct CommonOpts {
    std::string in;
    std::string out = "result.json";
    double tol = 1e-6;
    uint64_t seed = 0;
    bool timing = false;
};

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

int statusExit(FeasStatus s) {
    switch (s) {
        case FeasStatus::Feasible:
            return kExitFeasible;
        case FeasStatus::Infeasible:
            return kExitInfeasible;
        default:
            return kExitUndecided;
    }
}

Json resultHeader(const std::string& command, const CommonOpts& o) {
    Json j;
    j["format"] = 1;
    j["command"] = command;
    j["tolerances"] = Json{{"strictTol", o.tol}};
    j["seed"] = o.seed;
    return j;
}

void finishResult(Json& j, const CommonOpts& o, double seconds) {
    j["wall_time_s"] = o.timing ? seconds : 0.0;
    writeTextFile(o.out, dumpJson(j));
}

Json liftCertificate(const MaxConeResult& r) {
    Json cert;
    cert["type"] = "max-lifting";
    cert["route"] = maxRouteToString(r.route);
    Json fv = Json::array();
    for (double v : r.feas.point) fv.push_back(v);
    cert["freeVector"] = std::move(fv);
    Json blocks = Json::array();
    for (const auto& b : r.certificateBlocks) blocks.push_back(matrixToJson(b.mat()));
    cert["blocks"] = std::move(blocks);
    cert["lifting"] = elementToJson(r.lifting);
    return cert;
}

Json repCertificate(const RepTuple& rep, double value) {
    Json cert;
    cert["type"] = "rep-tuple";
    cert["d"] = rep.d;
    cert["unitary"] = rep.unitary;
    Json mats = Json::array();
    for (const auto& m : rep.mats) mats.push_back(matrixToJson(m));
    cert["mats"] = std::move(mats);
    cert["value"] = value;
    return cert;
}

HermitianMatrix hermFromJson(const Json& j) { return HermitianMatrix(matrixFromJson(j)); }

SubalgebraSpec algebraFromJson(const Json& j, int k) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "full") return SubalgebraSpec::full(k);
    if (type == "diagonal") return SubalgebraSpec::diagonal(k);
    if (type == "blockdiag") {
        std::vector<int> blocks;
        for (const auto& b : j.at("blocks")) blocks.push_back(b.get<int>());
        SubalgebraSpec s = SubalgebraSpec::blockDiagonal(blocks);
        if (s.k() != k) throw InvalidInput("block sizes do not sum to k");
        return s;
    }
    if (type == "permutation") {
        std::vector<std::vector<int>> gens;
        for (const auto& g : j.at("generators")) {
            std::vector<int> perm;
            for (const auto& v : g) perm.push_back(v.get<int>());
            gens.push_back(std::move(perm));
        }
        return SubalgebraSpec::permutationSpan(k, gens);
    }
    throw InvalidInput("unknown algebra type: " + type);
}

int cmdCheckMax(const CommonOpts& o, const std::string& route) {
    const auto t0 = Clock::now();
    const TensorElement x = loadElementFile(o.in);
    if (x.system.kind != SystemKind::NCCube) throw InvalidInput("check-max needs an NC element");
    MaxOptions mo;
    mo.strictTol = o.tol;
    mo.seed = o.seed;

    Json res = resultHeader("check-max", o);
    res["element"] = elementToJson(x);
    res["route"] = route;

    FeasStatus overall;
    if (route == "all") {
        const RouteReport rep = crossValidateRoutes(x, mo);
        Json routes = Json::array();
        const MaxConeResult* firstFeasible = nullptr;
        bool anyFeasible = false, anyInfeasible = false;
        for (const auto& r : rep.results) {
            Json jr;
            jr["route"] = maxRouteToString(r.route);
            jr["status"] = statusStr(r.feas.status);
            jr["margin"] = r.feas.margin;
            routes.push_back(std::move(jr));
            if (r.feas.status == FeasStatus::Feasible) {
                anyFeasible = true;
                if (!firstFeasible) firstFeasible = &r;
            }
            if (r.feas.status == FeasStatus::Infeasible) anyInfeasible = true;
        }
        res["routes"] = std::move(routes);
        res["route_contradiction"] = rep.contradiction;
        if (rep.contradiction) {
            res["status"] = "contradiction";
            std::cerr << "route contradiction detected; see " << o.out << "\n";
            finishResult(res, o, std::chrono::duration<double>(Clock::now() - t0).count());
            return kExitNumericalError;
        }
        overall = anyFeasible ? FeasStatus::Feasible : (anyInfeasible ? FeasStatus::Infeasible : FeasStatus::Undecided);
        res["status"] = statusStr(overall);
        double margin = 0;
        for (const auto& r : rep.results)
            if (r.feas.status == overall) margin = r.feas.margin;
        res["margin"] = margin;
        if (firstFeasible) res["certificate"] = liftCertificate(*firstFeasible);
    } else {
        const MaxConeResult r = maxMembership(x, maxRouteFromString(route), mo);
        overall = r.feas.status;
        res["status"] = statusStr(overall);
        res["margin"] = r.feas.margin;
        if (r.feas.status == FeasStatus::Feasible) res["certificate"] = liftCertificate(r);
    }
    std::cout << "check-max: " << res["status"].get<std::string>() << " margin "
              << formatDouble(res.contains("margin") ? res["margin"].get<double>() : 0.0) << "\n";
    finishResult(res, o, std::chrono::duration<double>(Clock::now() - t0).count());
    return statusExit(overall);
}

int cmdCheckMin(const CommonOpts& o, int dmax, int restarts) {
    const auto t0 = Clock::now();
    const TensorElement x = loadElementFile(o.in);
    if (x.system.kind != SystemKind::NCCube) throw InvalidInput("check-min needs an NC element");
    MinSearchOptions so;
    so.dMax = dmax;
    so.restarts = restarts;
    so.seed = o.seed;
    const MinSearchResult r = minViolationSearch(x, so);

    Json res = resultHeader("check-min", o);
    res["element"] = elementToJson(x);
    res["dmax"] = dmax;
    res["restarts"] = restarts;
    res["status"] = r.violation ? "violation" : "no_violation";
    res["best_value"] = r.bestValue;
    if (r.violation) res["certificate"] = repCertificate(r.rep, r.bestValue);
    std::cout << "check-min: " << res["status"].get<std::string>() << " best value " << formatDouble(r.bestValue)
              << "\n";
    finishResult(res, o, std::chrono::duration<double>(Clock::now() - t0).count());
    return r.violation ? kExitInfeasible : kExitFeasible;
}

int cmdRieszSolve(const CommonOpts& o) {
    const auto t0 = Clock::now();
    const Json in = Json::parse(readTextFile(o.in));
    const int k = in.at("k").get<int>();
    const SubalgebraSpec algebra = algebraFromJson(in.at("algebra"), k);
    const HermitianMatrix a1 = hermFromJson(in.at("a1"));
    const HermitianMatrix a2 = hermFromJson(in.at("a2"));
    std::vector<HermitianMatrix> b;
    for (const auto& bj : in.at("b")) b.push_back(hermFromJson(bj));
    const SchemeSolveResult r = solveScheme(a1, a2, b, algebra, o.tol, o.seed);

    Json res = resultHeader("riesz-solve", o);
    res["input"] = in;
    res["status"] = r.found() ? "found" : statusStr(r.feas.status);
    res["margin"] = r.feas.margin;
    if (r.found()) {
        Json cert;
        cert["type"] = "riesz-scheme";
        cert["a1"] = matrixToJson(a1.mat());
        cert["a2"] = matrixToJson(a2.mat());
        Json bs = Json::array(), xs = Json::array();
        for (const auto& bi : r.scheme->b) bs.push_back(matrixToJson(bi.mat()));
        for (const auto& xi : r.scheme->x) xs.push_back(matrixToJson(xi.mat()));
        cert["b"] = std::move(bs);
        cert["x"] = std::move(xs);
        cert["margin"] = r.scheme->margin;
        res["certificate"] = std::move(cert);
    }
    std::cout << "riesz-solve: " << res["status"].get<std::string>() << "\n";
    finishResult(res, o, std::chrono::duration<double>(Clock::now() - t0).count());
    return r.found() ? kExitFeasible : statusExit(r.feas.status);
}

int cmdTrInterpolate(const CommonOpts& o) {
    const auto t0 = Clock::now();
    const Json in = Json::parse(readTextFile(o.in));
    const int k = in.at("k").get<int>();
    const SubalgebraSpec algebra = algebraFromJson(in.at("algebra"), k);
    std::vector<HermitianMatrix> as, bs;
    for (const auto& aj : in.at("a")) as.push_back(hermFromJson(aj));
    for (const auto& bj : in.at("b")) bs.push_back(hermFromJson(bj));
    const InterpolationResult r = trInterpolate(as, bs, algebra, o.tol, o.seed);

    Json res = resultHeader("tr-interpolate", o);
    res["input"] = in;
    res["status"] = r.found() ? "found" : statusStr(r.feas.status);
    res["margin"] = r.feas.margin;
    if (r.found()) {
        Json cert;
        cert["type"] = "interpolant";
        cert["a"] = in.at("a");
        cert["b"] = in.at("b");
        cert["y"] = matrixToJson(r.y->mat());
        cert["margin"] = r.feas.margin - 1e-9 * (1.0 + std::abs(r.feas.margin));
        res["certificate"] = std::move(cert);
    }
    std::cout << "tr-interpolate: " << res["status"].get<std::string>() << "\n";
    finishResult(res, o, std::chrono::duration<double>(Clock::now() - t0).count());
    return r.found() ? kExitFeasible : statusExit(r.feas.status);
}

int cmdThSt(const CommonOpts& o) {
    const auto t0 = Clock::now();
    const Json in = Json::parse(readTextFile(o.in));
    const HermitianMatrix a0 = hermFromJson(in.at("A0"));
    const ComplexMatrix a1 = matrixFromJson(in.at("A1"));
    const ComplexMatrix a2 = matrixFromJson(in.at("A2"));
    const RadiusSplitResult r = radiusSplitDecompose(a0, a1, a2, o.tol, o.seed);

    Json res = resultHeader("th-st", o);
    res["input"] = in;
    res["status"] = r.found() ? "found" : statusStr(r.feas.status);
    res["margin"] = r.feas.margin;
    if (r.found()) {
        Json cert;
        cert["type"] = "radius-split";
        cert["A0"] = matrixToJson(a0.mat());
        cert["A1"] = matrixToJson(a1);
        cert["A2"] = matrixToJson(a2);
        cert["B"] = matrixToJson(r.b->mat());
        cert["C"] = matrixToJson(r.c->mat());
        cert["Z1"] = matrixToJson(r.z1->mat());
        cert["Z2"] = matrixToJson(r.z2->mat());
        cert["margin"] = r.feas.margin - 1e-9 * (1.0 + std::abs(r.feas.margin));
        res["certificate"] = std::move(cert);
    }
    std::cout << "th-st: " << res["status"].get<std::string>() << "\n";
    finishResult(res, o, std::chrono::duration<double>(Clock::now() - t0).count());
    return r.found() ? kExitFeasible : statusExit(r.feas.status);
}

bool verifyMaxLifting(const Json& res, std::string& msg) {
    const TensorElement x = elementFromJson(res.at("element"));
    const Json& cert = res.at("certificate");
    const MaxRoute route = maxRouteFromString(cert.at("route").get<std::string>());
    const LiftProblem lp = liftParameterisation(route, x);
    std::vector<double> v;
    for (const auto& val : cert.at("freeVector")) v.push_back(val.get<double>());
    if (static_cast<int>(v.size()) != lp.problem.freeDim()) {
        msg = "free vector length mismatch";
        return false;
    }
    const double margin = res.at("margin").get<double>();
    const std::vector<HermitianMatrix> blocks = lp.blockMatrices(v);
    const Json& storedBlocks = cert.at("blocks");
    if (storedBlocks.size() != blocks.size()) {
        msg = "block count mismatch";
        return false;
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
        const ComplexMatrix stored = matrixFromJson(storedBlocks[i]);
        if ((stored - blocks[i].mat()).maxAbsEntry() > 1e-9 * (1.0 + stored.maxAbsEntry())) {
            msg = "stored certificate blocks do not match the lifting parameterisation";
            return false;
        }
        const double me = minEig(blocks[i]);
        if (me < margin - 1e-8) {
            msg = "block margin " + formatDouble(me) + " below reported margin " + formatDouble(margin);
            return false;
        }
    }
    const TensorElement back = lp.pushforward(lp.lifting(v));
    if (back.distance(x) > 1e-8 * (1.0 + x.coeff("1").maxAbsEntry())) {
        msg = "lifting does not push forward to the element";
        return false;
    }
    msg = "max lifting confirmed at margin " + formatDouble(margin);
    return true;
}

bool verifyRepTuple(const Json& res, std::string& msg) {
    const TensorElement x = elementFromJson(res.at("element"));
    const Json& cert = res.at("certificate");
    RepTuple rep;
    rep.d = cert.at("d").get<int>();
    rep.unitary = cert.at("unitary").get<bool>();
    for (const auto& mj : cert.at("mats")) rep.mats.push_back(matrixFromJson(mj));
    for (const auto& m : rep.mats) {
        if (rep.unitary) {
            const ComplexMatrix gram = m.adjoint() * m;
            if ((gram - ComplexMatrix::identity(rep.d)).frobeniusNorm() > 1e-9) {
                msg = "certificate matrix is not unitary";
                return false;
            }
        } else {
            if (m.hermitianDefect() > 1e-9 || opNorm(m) > 1.0 + 1e-9) {
                msg = "certificate matrix is not a Hermitian contraction";
                return false;
            }
        }
    }
    const double value = cert.at("value").get<double>();
    const double recomputed = rep.unitary ? evalS2Rep(x, rep) : evalNCRep(x, rep);
    if (std::abs(recomputed - value) > 1e-9 * (1.0 + std::abs(value))) {
        msg = "certificate value does not recompute (" + formatDouble(recomputed) + ")";
        return false;
    }
    if (recomputed >= -1e-7) {
        msg = "certificate does not witness a violation";
        return false;
    }
    msg = "violation confirmed at eigenvalue " + formatDouble(recomputed);
    return true;
}

bool verifyRieszScheme(const Json& cert, std::string& msg) {
    RieszScheme s;
    s.a1 = hermFromJson(cert.at("a1"));
    s.a2 = hermFromJson(cert.at("a2"));
    for (const auto& bj : cert.at("b")) s.b.push_back(hermFromJson(bj));
    for (const auto& xj : cert.at("x")) s.x.push_back(hermFromJson(xj));
    s.margin = cert.at("margin").get<double>();
    const SchemeCheck c = verifyScheme(s);
    msg = c.valid ? "scheme confirmed, worst slack " + formatDouble(c.worstSlack)
                  : "scheme violated, worst slack " + formatDouble(c.worstSlack);
    return c.valid;
}

bool verifyInterpolant(const Json& cert, std::string& msg) {
    const HermitianMatrix y = hermFromJson(cert.at("y"));
    const double margin = cert.at("margin").get<double>();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& aj : cert.at("a")) {
        HermitianMatrix gap = hermFromJson(aj);
        gap -= y;
        worst = std::min(worst, minEig(gap) - margin);
    }
    for (const auto& bj : cert.at("b")) {
        HermitianMatrix gap = y;
        gap -= hermFromJson(bj);
        worst = std::min(worst, minEig(gap) - margin);
    }
    msg = (worst >= 0 ? "interpolant confirmed" : "interpolant violated") + std::string(", worst slack ") +
          formatDouble(worst);
    return worst >= 0;
}

bool verifyRadiusSplit(const Json& cert, std::string& msg) {
    const HermitianMatrix a0 = hermFromJson(cert.at("A0"));
    const ComplexMatrix a1 = matrixFromJson(cert.at("A1"));
    const ComplexMatrix a2 = matrixFromJson(cert.at("A2"));
    const HermitianMatrix b = hermFromJson(cert.at("B"));
    const HermitianMatrix c = hermFromJson(cert.at("C"));
    const HermitianMatrix z1 = hermFromJson(cert.at("Z1"));
    const HermitianMatrix z2 = hermFromJson(cert.at("Z2"));
    const double margin = cert.at("margin").get<double>();
    HermitianMatrix mean = b;
    mean += c;
    mean *= 0.5;
    mean -= a0;
    if (mean.frobeniusNorm() > 1e-8) {
        msg = "B and C do not average to A0";
        return false;
    }
    const int k = a0.dim();
    const auto dilation = [&](const HermitianMatrix& d, const HermitianMatrix& z, const ComplexMatrix& a) {
        ComplexMatrix big(2 * k, 2 * k);
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) {
                big(p, q) = d(p, q) + z(p, q);
                big(k + p, k + q) = d(p, q) - z(p, q);
                big(p, k + q) = 2.0 * a(p, q);
                big(k + q, p) = 2.0 * std::conj(a(p, q));
            }
        return HermitianMatrix(big);
    };
    const double m1 = minEig(dilation(b, z1, a1));
    const double m2 = minEig(dilation(c, z2, a2));
    if (std::min(m1, m2) < margin - 1e-8) {
        msg = "dilation blocks fall below the reported margin";
        return false;
    }
    msg = "radius split confirmed, block margins " + formatDouble(m1) + " / " + formatDouble(m2);
    return true;
}

int cmdVerify(const std::string& path) {
    const Json res = Json::parse(readTextFile(path));
    if (!res.contains("certificate")) {
        std::cout << "verify: no certificate present, nothing to verify\n";
        return kExitFeasible;
    }
    const std::string type = res.at("certificate").at("type").get<std::string>();
    std::string msg;
    bool ok = false;
    if (type == "max-lifting")
        ok = verifyMaxLifting(res, msg);
    else if (type == "rep-tuple")
        ok = verifyRepTuple(res, msg);
    else if (type == "riesz-scheme")
        ok = verifyRieszScheme(res.at("certificate"), msg);
    else if (type == "interpolant")
        ok = verifyInterpolant(res.at("certificate"), msg);
    else if (type == "radius-split")
        ok = verifyRadiusSplit(res.at("certificate"), msg);
    else
        throw InvalidInput("unknown certificate type: " + type);
    std::cout << "verify: " << (ok ? "confirmed" : "FAILED") << " (" << msg << ")\n";
    return ok ? kExitFeasible : kExitInfeasible;
}

int cmdKernels(int n) {
    for (KernelName name :
         {KernelName::Jn, KernelName::Qn, KernelName::Kn1, KernelName::Ln1, KernelName::D0, KernelName::Sn0}) {
        const KernelSubspace ks = kernelBasis(name, n);
        std::cout << kernelNameToString(name) << " (ambient " << ks.ambient.str() << ", dim " << ks.dim() << ")\n";
        const auto labels = ks.ambient.basisLabels();
        for (const auto& v : ks.basisVectors) {
            std::cout << "  ";
            bool first = true;
            for (size_t t = 0; t < labels.size(); ++t) {
                if (v[t] == 0.0) continue;
                if (!first) std::cout << " ";
                if (v[t] > 0 && !first) std::cout << "+";
                if (v[t] == 1.0)
                    std::cout << "";
                else if (v[t] == -1.0)
                    std::cout << "-";
                else
                    std::cout << v[t] << "*";
                std::cout << labels[t];
                first = false;
            }
            std::cout << "\n";
        }
        if (name == KernelName::Sn0) {
            std::cout << "  null: not computable at level 1 (checked: independence and defining equations)\n";
        } else {
            const NullCheckResult r = isNullSubspace(ks);
            std::cout << "  null: " << (r.isNull ? "true" : "false") << "\n";
        }
    }
    return kExitFeasible;
}

int cmdSweep(const std::string& suite, int trials, uint64_t seed, const std::string& csvPath,
             const std::string& summaryPath, int threads) {
    const SweepResult r = runSweep(suite, trials, seed, threads);
    writeTextFile(csvPath, r.csv);
    writeTextFile(summaryPath, dumpJson(r.summary));
    std::cout << "sweep " << suite << ": " << r.stats.agreements << "/" << r.stats.trials << " agreements, "
              << r.stats.contradictions << " contradictions, " << r.stats.searchShortfalls << " shortfalls\n";
    return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative-cube tensor cone toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string route = "tridiag";
    int dmax = 6, restarts = 32, kernelsN = 3, trials = 50, threads = 2;
    std::string suite = "agreement", csvPath = "sweep.csv", summaryPath = "sweep-result.json";
    std::string verifyPath;

    auto addCommon = [&](CLI::App* cmd, bool needsIn = true) {
        if (needsIn) cmd->add_option("--in", o.in, "input JSON file")->required();
        cmd->add_option("--out", o.out, "result file path");
        cmd->add_option("--tol", o.tol, "strict positivity tolerance");
        cmd->add_option("--seed", o.seed, "random seed");
        cmd->add_flag("--timing", o.timing, "record wall time (breaks byte reproducibility)");
    };

    CLI::App* checkMax = app.add_subcommand("check-max", "strong max-cone membership via a lifting route");
    addCommon(checkMax);
    checkMax->add_option("--route", route, "tridiag|arrow|diagonal|qn|all");

    CLI::App* checkMin = app.add_subcommand("check-min", "adversarial min-cone violation search");
    addCommon(checkMin);
    checkMin->add_option("--dmax", dmax, "largest representation dimension");
    checkMin->add_option("--restarts", restarts, "gradient restarts per dimension");

    CLI::App* riesz = app.add_subcommand("riesz-solve", "complete scheme data inside a subalgebra");
    addCommon(riesz);

    CLI::App* interp = app.add_subcommand("tr-interpolate", "tight interpolation inside a subalgebra");
    addCommon(interp);

    CLI::App* thst = app.add_subcommand("th-st", "radius-split decomposition of (A0, A1, A2)");
    addCommon(thst);

    CLI::App* verify = app.add_subcommand("verify", "re-verify a result file's certificate");
    verify->add_option("--in", verifyPath, "result JSON file")->required();

    CLI::App* kernels = app.add_subcommand("kernels", "list kernel bases and null-subspace verdicts");
    kernels->add_option("--n", kernelsN, "cube parameter");

    CLI::App* sweep = app.add_subcommand("sweep", "run an experiment suite and emit CSV");
    sweep->add_option("--suite", suite, "agreement|nc2|riesz|thst");
    sweep->add_option("--trials", trials, "number of instances");
    sweep->add_option("--seed", o.seed, "random seed");
    sweep->add_option("--csv", csvPath, "CSV output path");
    sweep->add_option("--out", summaryPath, "summary result path");
    sweep->add_option("--threads", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (checkMax->parsed()) return cmdCheckMax(o, route);
        if (checkMin->parsed()) return cmdCheckMin(o, dmax, restarts);
        if (riesz->parsed()) return cmdRieszSolve(o);
        if (interp->parsed()) return cmdTrInterpolate(o);
        if (thst->parsed()) return cmdThSt(o);
        if (verify->parsed()) return cmdVerify(verifyPath);
        if (kernels->parsed()) return cmdKernels(kernelsN);
        if (sweep->parsed()) return cmdSweep(suite, trials, o.seed, csvPath, summaryPath, threads);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitInputError;
}
