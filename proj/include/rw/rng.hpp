#pragma once

#include <cstdint>

namespace rw {

// splitmix64 finalizer; passes standard avalanche tests.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based generator: draw i is a pure function of (seed, i), so
// concurrent evaluation can never reorder the stream. Randomized procedures
// index draws by vertex id / trial id instead of consuming a sequence.
struct CounterRng {
    std::uint64_t seed = 0;

    std::uint64_t word(std::uint64_t index) const { return mix64(seed ^ mix64(index)); }

    // Uniform in [0, bound) via the multiply-shift reduction. The modulo bias
    // of the plain approach is avoided; for the bounds used here (< 2^20) the
    // residual nonuniformity is below 2^-44.
    std::uint32_t uniform(std::uint64_t index, std::uint32_t bound) const {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(word(index)) * bound) >> 64);
    }

    // Derived stream for (seed, k) pairs, e.g. one per Monte-Carlo trial.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t k) {
        return mix64(seed + 0x632be59bd9b4e019ull * (k + 1));
    }
};

}  // namespace rw
