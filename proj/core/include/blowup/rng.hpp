#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blowup/bitset.hpp"

namespace blowup {

/// SplitMix64 finaliser; used to derive independent per-trial/per-restart seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seeded generator whose output is identical across platforms: the engine is
/// std::mt19937_64 and all range reduction is done here rather than through
/// the implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// First k entries of `items` become a uniform k-subset (partial Fisher-Yates).
    template <typename T>
    void partial_shuffle(std::vector<T>& items, std::size_t k)
    {
        for (std::size_t i = 0; i < k && i < items.size(); ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(items.size() - i));
            std::swap(items[i], items[j]);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        partial_shuffle(items, items.size());
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace blowup
