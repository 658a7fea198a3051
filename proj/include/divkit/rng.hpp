#pragma once

#include <cmath>
#include <cstdint>

namespace divkit {

// Deterministic splitmix64 stream, identical on every platform.  All
// randomness in the library and the verification suites flows from one user
// seed through for_instance(seed, suite, index), so suites can be reordered
// or run in parallel without changing any instance, and any reported failure
// replays from (seed, suite, index) alone.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    static SplitRng for_instance(std::uint64_t seed, std::uint64_t suite, std::uint64_t index) {
        std::uint64_t h = mix(seed);
        h = mix(h ^ (suite * 0x9E3779B97F4A7C15ULL));
        h = mix(h ^ (index * 0xBF58476D1CE4E5B9ULL));
        return SplitRng(h);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in the open interval (0, 1).
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % static_cast<std::uint64_t>(n));
    }

    bool bernoulli(double p) { return next_unit() < p; }

    double exponential() { return -std::log(next_unit()); }  // rate 1, always finite > 0

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace divkit
