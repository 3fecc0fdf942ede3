#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cmplab/key.hpp"

namespace cmplab {

/// Array-backed binary max-heap with 1-indexed addressing. Slot 0 is
/// unused; navigation is the plain 2i arithmetic. `heap_size` tracks the
/// live prefix and never exceeds the slot count.
class HeapArray {
public:
    HeapArray() = default;

    explicit HeapArray(std::vector<Key> keys) : slots_(keys.size() + 1) {
        for (std::size_t i = 0; i < keys.size(); ++i) slots_[i + 1] = keys[i];
        heap_size_ = keys.size();
    }

    static constexpr std::size_t parent(std::size_t i) { return i / 2; }
    static constexpr std::size_t left(std::size_t i) { return 2 * i; }
    static constexpr std::size_t right(std::size_t i) { return 2 * i + 1; }

    std::size_t heap_size() const { return heap_size_; }
    std::size_t slot_count() const { return slots_.empty() ? 0 : slots_.size() - 1; }

    void set_heap_size(std::size_t n) {
        if (n > slot_count()) throw std::out_of_range("heap_size exceeds slot count");
        heap_size_ = n;
    }

    Key& at(std::size_t i) {
        check_live(i);
        return slots_[i];
    }
    const Key& at(std::size_t i) const {
        check_live(i);
        return slots_[i];
    }

    /// Access to sorted-output slots beyond heap_size (still 1-indexed).
    Key& slot(std::size_t i) {
        if (i == 0 || i > slot_count()) throw std::out_of_range("heap slot out of range");
        return slots_[i];
    }
    const Key& slot(std::size_t i) const {
        if (i == 0 || i > slot_count()) throw std::out_of_range("heap slot out of range");
        return slots_[i];
    }

    /// Heap-order predicate over the live prefix.
    bool heap_ordered() const {
        for (std::size_t i = 1; i <= heap_size_; ++i) {
            const std::size_t l = left(i), r = right(i);
            if (l <= heap_size_ && key_less(slots_[i], slots_[l])) return false;
            if (r <= heap_size_ && key_less(slots_[i], slots_[r])) return false;
        }
        return true;
    }

    void append_slot(const Key& k) {
        if (slots_.empty()) slots_.resize(1);
        slots_.push_back(k);
    }

    /// All slots 1..slot_count as a plain vector.
    std::vector<Key> release() && {
        if (slots_.empty()) return {};
        return std::vector<Key>(slots_.begin() + 1, slots_.end());
    }

private:
    void check_live(std::size_t i) const {
        if (i == 0 || i > heap_size_) throw std::out_of_range("heap index out of 1..heap_size");
    }

    std::vector<Key> slots_;
    std::size_t heap_size_ = 0;
};

}  // namespace cmplab
