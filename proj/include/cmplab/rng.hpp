#pragma once

#include <cstdint>
#include <span>

namespace cmplab {

/// splitmix64. State advances by the golden-ratio increment; output is the
/// standard xor-shift-multiply finalizer. Bit-exact across platforms, so a
/// seed fully determines every experiment.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0, ..., bound} via next() % (bound + 1). The
    /// modulo bias is < 2^-52 for every bound used here.
    std::uint64_t below(std::uint64_t bound_inclusive) {
        return next() % (bound_inclusive + 1);
    }

    /// Coin flip from the top bit.
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

/// Fisher-Yates: for i = n-1 down to 1, swap a[i] with a[j], j drawn
/// uniformly from {0..i}. Same seed, same permutation.
template <class T>
void fisher_yates(std::span<T> a, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t i = a.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i - 1));
        using std::swap;
        swap(a[i - 1], a[j]);
    }
}

template <class Container>
Container shuffled(Container c, std::uint64_t seed) {
    fisher_yates(std::span(c.data(), c.size()), seed);
    return c;
}

}  // namespace cmplab
