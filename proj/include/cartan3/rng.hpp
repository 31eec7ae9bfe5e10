#pragma once

#include <array>
#include <cstdint>

namespace cartan3 {

/**
 * @brief Philox4x32-10 counter-based generator (Salmon et al., SC'11).
 *
 * Stateless: a (key, counter) pair maps to a 128-bit random block. Streams
 * indexed by the high counter word are disjoint by construction, which gives
 * the determinism contract for parallel Monte-Carlo: results depend only on
 * (seed, sample index), never on scheduling.
 */
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;

    explicit Philox4x32(std::uint64_t key) : key_(key) {}

    Block block(std::uint64_t ctr_hi, std::uint64_t ctr_lo) const;

    std::uint64_t key() const { return key_; }

private:
    std::uint64_t key_;
};

/// Convenience stream over a fixed (seed, stream-id) counter lane.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform();
    /// Uniform on [a,b).
    double uniform(double a, double b);
    /// Standard normal (Box-Muller; pairs are cached).
    double normal();

    std::uint64_t next_u64();

    /// Derived stream with its own disjoint counter lane.
    RngStream substream(std::uint64_t id) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint32_t next_u32();

    Philox4x32 eng_;
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    Philox4x32::Block buf_{};
    int bufpos_ = 4;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace cartan3
