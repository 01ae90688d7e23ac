#pragma once

#include <cstdint>

namespace vinberg {

// splitmix64: tiny deterministic generator, identical on every platform.
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n) by rejection
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }
    long range(long lo, long hi) { return lo + (long)below((uint64_t)(hi - lo + 1)); }
};

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    DetRng r(seed ^ (0xa0761d6478bd642full * (stream + 1)));
    return r.next();
}

}  // namespace vinberg
