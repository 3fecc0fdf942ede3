#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cmplab {

/// A sortable key. Real keys carry their position in the global sorted
/// order; dummy keys are sentinels that compare strictly below every real
/// key. Dummies order among themselves by descending creation index, so a
/// later-created dummy is smaller.
struct Key {
    std::int64_t rank = 0;
    bool is_dummy = false;
    std::int64_t dummy_id = 0;

    static Key real(std::int64_t rank) { return Key{rank, false, 0}; }
    static Key dummy(std::int64_t id) { return Key{0, true, id}; }
};

inline std::strong_ordering key_compare(const Key& a, const Key& b) {
    if (a.is_dummy != b.is_dummy) {
        return a.is_dummy ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.is_dummy) {
        return b.dummy_id <=> a.dummy_id;  // later dummy is smaller
    }
    return a.rank <=> b.rank;
}

inline bool key_less(const Key& a, const Key& b) {
    return key_compare(a, b) == std::strong_ordering::less;
}

/// An order-consecutive block of `len` ranks starting at `lo`; keys inside
/// it are "red", all other real keys "blue". Dummies are never red.
struct RedRange {
    std::int64_t lo = 0;
    std::int64_t len = 0;

    bool contains(const Key& k) const {
        return !k.is_dummy && k.rank >= lo && k.rank < lo + len;
    }
};

/// Keys with ranks 0..n-1 in ascending order.
inline std::vector<Key> make_ranked_keys(std::size_t n) {
    std::vector<Key> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(Key::real(static_cast<std::int64_t>(i)));
    return out;
}

}  // namespace cmplab
