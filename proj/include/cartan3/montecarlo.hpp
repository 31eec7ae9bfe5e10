#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "cartan3/rng.hpp"

namespace cartan3 {

/// Monte-Carlo estimate with the standard error of the mean.
struct MCEstimate {
    std::complex<double> value{0, 0};
    double std_error = 0.0;
    long samples = 0;
};

struct MCConfig {
    long samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

/**
 * @brief Deterministic Monte-Carlo mean of a sampler-driven integrand.
 *
 * Sample i draws from its own counter lane RngStream(seed, i), so the result
 * is bitwise identical for a fixed (seed, N) regardless of the worker count;
 * workers only split the evaluation loop. Throws std::invalid_argument for
 * N < 100 and NumericalError naming the sample index on non-finite values.
 */
MCEstimate integrate_mc(const std::function<std::complex<double>(RngStream&)>& sample_value, long n,
                        std::uint64_t seed, int workers = 1);

inline MCEstimate integrate_mc(const std::function<std::complex<double>(RngStream&)>& sample_value,
                               const MCConfig& cfg) {
    return integrate_mc(sample_value, cfg.samples, cfg.seed, cfg.workers);
}

}  // namespace cartan3
