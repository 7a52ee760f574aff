#pragma once

#include <cstdint>
#include <string>

#include "nccube/io.hpp"

namespace nccube {

struct SweepStats {
    int trials = 0;
    int decided = 0;
    int agreements = 0;
    int contradictions = 0;     // certificate-level defects
    int searchShortfalls = 0;   // expected-but-unfound violations (reported, tolerated)
    int implicationFailures = 0;
};

struct SweepResult {
    std::string suite;
    std::string csv;
    Json summary;  // sweep ResultFile payload
    SweepStats stats;
};

/// Reproducible experiment sweeps: "agreement" (four max routes on random
/// instances), "nc2" (max decision against the representation search on
/// NC(2)), "riesz" (subalgebra scheme solves against full-algebra solves on
/// diagonal data), "thst" (split criterion against the unitary search).
/// Trials run in parallel with per-trial derived seeds; output is assembled
/// in trial order, so identical inputs give byte-identical output.
SweepResult runSweep(const std::string& suite, int trials, uint64_t seed, int threads = 2);

}  // namespace nccube
