#include "cartan3/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cartan3/errors.hpp"

namespace cartan3 {

MCEstimate integrate_mc(const std::function<std::complex<double>(RngStream&)>& sample_value, long n,
                        std::uint64_t seed, int workers) {
    if (n < 100) throw std::invalid_argument("integrate_mc requires at least 100 samples");
    if (workers < 1) throw std::invalid_argument("worker count must be >= 1");

    std::vector<std::complex<double>> values(static_cast<size_t>(n));
    std::atomic<long> bad_index{-1};

    auto run_block = [&](long begin, long end) {
        for (long i = begin; i < end; ++i) {
            RngStream stream(seed, static_cast<std::uint64_t>(i));
            const std::complex<double> v = sample_value(stream);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                long expected = -1;
                bad_index.compare_exchange_strong(expected, i);
                return;
            }
            values[static_cast<size_t>(i)] = v;
        }
    };

    if (workers == 1) {
        run_block(0, n);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long begin = w * chunk;
            const long end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_block, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    if (bad_index.load() >= 0)
        throw NumericalError("integrate_mc: non-finite sample value at index " +
                             std::to_string(bad_index.load()));

    // Serial reduction in sample order keeps the result independent of the
    // worker layout.
    std::complex<double> sum(0, 0);
    for (const auto& v : values) sum += v;
    const std::complex<double> mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (const auto& v : values) {
        const std::complex<double> d = v - mean;
        sq += std::norm(d);
    }
    MCEstimate out;
    out.value = mean;
    out.samples = n;
    out.std_error = n > 1 ? std::sqrt(sq / (static_cast<double>(n) - 1.0) / static_cast<double>(n)) : 0.0;
    return out;
}

}  // namespace cartan3
