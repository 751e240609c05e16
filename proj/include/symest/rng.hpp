#pragma once

#include <cstdint>

namespace symest {

/// Deterministic uniform generator (PCG32, one stream per selector value).
///
/// Streams derived from the same seed but different stream ids are
/// statistically independent, which is what lets Monte Carlo trials draw
/// from (master seed, trial index) and stay reproducible under any worker
/// count. Output is platform-independent: integer arithmetic only.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(0), inc_((stream << 1u) | 1u) {
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// One uniform draw in [0, 1) with 53 random mantissa bits.
    double next_u01() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace symest
