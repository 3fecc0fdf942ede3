#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cmplab/rng.hpp"
#include "cmplab/strings.hpp"

namespace cmplab {

struct QuicksortStats {
    std::uint64_t key_comparisons = 0;
    std::uint64_t symbol_comparisons = 0;
};

namespace detail {

// Classic first-pivot quicksort: the pivot is compared against every other
// element of its partition. `cmp(a, b)` returns true when a < b and
// accounts the comparison.
template <class T, class Less>
void quicksort_first_pivot(std::vector<T>& a, Less&& cmp) {
    if (a.size() <= 1) return;
    const T pivot = std::move(a.front());
    std::vector<T> lo, hi;
    lo.reserve(a.size());
    hi.reserve(a.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (cmp(a[i], pivot)) {
            lo.push_back(std::move(a[i]));
        } else {
            hi.push_back(std::move(a[i]));
        }
    }
    quicksort_first_pivot(lo, cmp);
    quicksort_first_pivot(hi, cmp);
    a.clear();
    for (auto& x : lo) a.push_back(std::move(x));
    a.push_back(pivot);
    for (auto& x : hi) a.push_back(std::move(x));
}

}  // namespace detail

/// Shuffles `keys` with `seed`, then sorts with first-pivot quicksort,
/// accumulating both key comparisons and symbol costs via string_compare.
inline std::vector<StringKey> instrumented_quicksort(std::vector<StringKey> keys,
                                                     std::uint64_t seed,
                                                     QuicksortStats& stats) {
    keys = shuffled(std::move(keys), seed);
    detail::quicksort_first_pivot(keys, [&stats](const StringKey& a, const StringKey& b) {
        const auto res = string_compare(a, b);
        ++stats.key_comparisons;
        stats.symbol_comparisons += res.symbol_cost;
        return res.order == std::strong_ordering::less;
    });
    return keys;
}

/// Integer-key variant; only key comparisons are meaningful.
inline std::vector<std::int64_t> instrumented_quicksort(std::vector<std::int64_t> keys,
                                                        std::uint64_t seed,
                                                        QuicksortStats& stats) {
    keys = shuffled(std::move(keys), seed);
    detail::quicksort_first_pivot(keys, [&stats](std::int64_t a, std::int64_t b) {
        ++stats.key_comparisons;
        return a < b;
    });
    return keys;
}

}  // namespace cmplab
