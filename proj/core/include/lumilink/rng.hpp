#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lumilink {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded random stream backed by std::mt19937_64.
///
/// Sub-streams are addressed by (seed, stream id, index); the engine seed of a
/// sub-stream is splitmix64(seed ^ splitmix64(stream * 2^32 + index + 1)).
/// Doubles are built from the top 53 bits of one engine output, and the
/// exponential variate is the inverse CDF -log(1 - u), so sequences do not
/// depend on the standard library's distribution implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    static RandomStream derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        const std::uint64_t key = (stream << 32) + index + 1;
        return RandomStream(splitmix64(seed ^ splitmix64(key)));
    }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unit-mean exponential.
    double exponential() { return -std::log1p(-uniform()); }

private:
    std::mt19937_64 engine_;
};

/// Well-known stream ids.
namespace streams {
inline constexpr std::uint64_t kTrial = 1;
inline constexpr std::uint64_t kOracleScenario = 2;
}  // namespace streams

}  // namespace lumilink
