#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace strata {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, which would break byte-stable
/// corpora across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n); n must be positive.
    std::size_t index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    /// Uniform in [lo, hi].
    long between(long lo, long hi) {
        return lo + static_cast<long>(index(static_cast<std::size_t>(hi - lo + 1)));
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return index(den) < num; }

private:
    std::mt19937_64 engine_;
};

}  // namespace strata
