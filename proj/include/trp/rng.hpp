#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace trp {

/// Seeded random stream. All stochastic choices in the library draw from an
/// explicit stream so that identical seeds give identical results everywhere.
/// Bounded draws are hand-rolled (rejection sampling) instead of using
/// std::uniform_int_distribution, whose output is implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw from [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % span);
    }

    /// Inclusive integer range [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform_index(static_cast<std::size_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1).
    double uniform_real01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    template <class T>
    const T& pick(const std::vector<T>& choices) {
        return choices[uniform_index(choices.size())];
    }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace trp
