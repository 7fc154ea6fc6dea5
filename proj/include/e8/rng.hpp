#pragma once

#include <cstdint>

namespace e8 {

// splitmix64: tiny deterministic generator.  We deliberately avoid the
// <random> engines/distributions here because their output streams are not
// pinned by the standard, and seeded experiments must reproduce bit-for-bit
// across toolchains.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection; n > 0
    uint64_t below(uint64_t n) {
        uint64_t lim = (~uint64_t(0)) - (~uint64_t(0)) % n;
        uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + (int64_t)below((uint64_t)(hi - lo + 1));
    }

    // independent child stream (used to make per-sample draws order-free)
    static Rng substream(uint64_t seed, uint64_t idx) {
        Rng mixer(seed ^ (0x517cc1b727220a95ull * (idx + 1)));
        return Rng(mixer.next());
    }
};

}  // namespace e8
