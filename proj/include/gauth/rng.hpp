#pragma once

#include <cstdint>

namespace gauth {

/// Deterministic random source (splitmix64). Identical output on every
/// platform for a given seed, unlike the std:: distributions.
class DetRng {
public:
    explicit DetRng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) via bitmask rejection. bound must be > 0.
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    /// Derive an independent substream; used so that per-entity randomness
    /// does not depend on consumption order elsewhere.
    DetRng fork(uint64_t tag) {
        return DetRng(next() ^ (tag * 0x9e3779b97f4a7c15ULL));
    }

private:
    uint64_t state_;
};

} // namespace gauth
