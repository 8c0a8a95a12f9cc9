#pragma once

#include <cstdint>
#include <random>

namespace gnpx {

// splitmix64 finalizer (Vigna). Full avalanche, so mixing a master seed with a
// trial index gives per-trial streams that don't collide for nearby indices.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

// mt19937_64 has a standard-mandated output sequence, so samples are
// bit-identical across platforms and toolchains. The uniform conversion is
// done by hand for the same reason: std::uniform_real_distribution is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0,1), 53 random bits
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gnpx
