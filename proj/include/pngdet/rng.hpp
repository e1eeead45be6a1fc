#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pngdet {

// splitmix64 finalizer; good avalanche, used to whiten (seed, index) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Substream seed for replica `index` of master stream `seed`.  The double
// mix makes the map (seed, index) -> substream effectively random, so the
// results cannot depend on which worker picks up which replica.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ 0x8000000000000000ULL) + index);
}

// Thin wrapper over mt19937_64.  Uniform doubles are produced from raw bits
// (not uniform_real_distribution) so streams are bit-identical across
// standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    // uniform on (0,1]; never returns 0, safe under log()
    double uniform_pos() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform on [0,1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // P[w = m] = (1-p) p^m, m >= 0, via inverse CDF: w = floor(log u / log p)
    std::int64_t geometric(double p) {
        if (p <= 0.0) return 0;
        double u = uniform_pos();
        if (u == 1.0) return 0;
        return static_cast<std::int64_t>(std::floor(std::log(u) / std::log(p)));
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        // rejection-free modulo is fine here; ranges are tiny vs 2^64
        return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace pngdet
