#pragma once

#include <cstdint>

namespace moritalab {

// Counter-based splittable RNG. A draw is a pure function of
// (seed, stream, counter), so results do not depend on scheduling or
// worker count; distinct streams are statistically independent.
inline uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline uint64_t counter_hash(uint64_t seed, uint64_t stream, uint64_t counter) {
    uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (stream + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (counter + 0x94d049bb133111ebULL));
    return h;
}

struct RngStream {
    uint64_t seed = 0;
    uint64_t stream = 0;
    uint64_t counter = 0;

    // Uniform in [0,1) with 53 random bits.
    double uniform() { return uniform_at(counter++); }

    double uniform_at(uint64_t index) const {
        return static_cast<double>(counter_hash(seed, stream, index) >> 11) * 0x1.0p-53;
    }
};

} // namespace moritalab
