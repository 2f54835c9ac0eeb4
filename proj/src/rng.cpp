#include "dend/rng.hpp"

namespace dend {

std::uint64_t rng::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rng::below(std::uint64_t bound) {
    // Rejection below the largest multiple of bound keeps the draw unbiased.
    std::uint64_t limit = bound * (~0ULL / bound);
    for (;;) {
        std::uint64_t x = next_u64();
        if (x < limit) return x % bound;
    }
}

long rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

rational rng::small_rational() {
    if (below(4) == 0) {
        static const long pool_num[] = {0, 1, -1, 2, 1};
        static const long pool_den[] = {1, 1, 1, 1, 2};
        std::size_t k = below(5);
        return {pool_num[k], pool_den[k]};
    }
    long num = range(-12, 12);
    long den = range(1, 8);
    return {num, den};
}

rational rng::nonzero_small_rational() {
    for (;;) {
        rational q = small_rational();
        if (!q.is_zero()) return q;
    }
}

std::uint64_t rng::derive(std::uint64_t seed, std::string_view context) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : context) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    rng mixer(seed ^ h);
    return mixer.next_u64();
}

}  // namespace dend
