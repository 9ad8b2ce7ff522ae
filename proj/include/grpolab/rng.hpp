#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace grpolab {

// splitmix64; used to derive independent substream seeds from structured keys.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Mix a tuple of words (seed, step, question id, sample index, ...) into one
// substream seed. Order-sensitive by construction.
inline std::uint64_t seed_mix(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t w : words) {
        h = splitmix64(h ^ splitmix64(w));
    }
    return h;
}

// Deterministic uniform stream. mt19937_64 output is pinned by the standard,
// and uniform() avoids std::uniform_real_distribution (whose mapping is
// implementation-defined), so identical seeds give identical bytes everywhere.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_word() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace grpolab
