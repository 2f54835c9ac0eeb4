#pragma once

#include <cstdint>
#include <string_view>

#include "dend/rational.hpp"

namespace dend {

/// Deterministic generator (splitmix64 core).  Bit-for-bit reproducible across
/// platforms; standard-library distributions are deliberately not used.
class rng {
  public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform in [0, bound), bound > 0; unbiased via rejection.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi);

    /// Small rational biased toward structurally interesting values
    /// (0, 1, -1, 2, 1/2) with a tail of num/den in [-12,12] x [1,8].
    rational small_rational();
    rational nonzero_small_rational();

    /// Stable per-context seed: mixes the base seed with an FNV-1a hash of the
    /// context string, so independent sampling sites decorrelate.
    static std::uint64_t derive(std::uint64_t seed, std::string_view context);

  private:
    std::uint64_t state_;
};

}  // namespace dend
