// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace nomopt {

/// Small deterministic PRNG (splitmix64 core). Used instead of the
/// standard distributions so that seeded runs produce identical streams
/// on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t next_index(std::size_t n) {
        // Rejection sampling keeps the draw unbiased.
        const std::uint64_t bound = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return static_cast<std::size_t>(x % bound);
    }

    /// Fisher-Yates shuffle with this generator.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = next_index(i);
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Mixes a base seed with sweep-point and drop indices so that each drop
/// gets an independent stream while strategies at the same point share it.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t sweep_index,
                                 std::uint64_t drop_index) {
    Rng mixer(base ^ (0xA24BAED4963EE407ULL * (sweep_index + 1)) ^
              (0x9FB21C651E98DF25ULL * (drop_index + 1)));
    return mixer.next_u64();
}

}  // namespace nomopt
