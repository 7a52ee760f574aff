#pragma once

#include <cmath>
#include <cstdint>

#include "nccube/matrix.hpp"

namespace nccube {

/// Deterministic RNG used everywhere randomness is needed. Gaussian draws
/// are Box-Muller on top of the raw 64-bit stream so that the byte stream
/// of results is identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    /// Stream derivation for parallel work units: independent and
    /// reproducible given (seed, index).
    static Rng derived(uint64_t seed, uint64_t index) { return Rng(mix(seed + 0x632be59bd9b4e019ULL * (index + 1))); }

    uint64_t next() {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0,1)

    double uniformSym() { return 2.0 * uniform() - 1.0; }  // [-1,1)

    double gaussian() {
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Complex gaussianComplex() { return Complex(gaussian(), gaussian()); }

    int uniformInt(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

    ComplexMatrix gaussianMatrix(int rows, int cols) {
        ComplexMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = gaussianComplex();
        return m;
    }

    HermitianMatrix gaussianHermitian(int dim) { return HermitianMatrix(gaussianMatrix(dim, dim)); }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
        z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
        return z ^ (z >> 33);
    }

    uint64_t state_;
};

}  // namespace nccube
