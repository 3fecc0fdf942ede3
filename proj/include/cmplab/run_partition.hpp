#pragma once

#include <cstdint>
#include <vector>

#include "cmplab/heap_core.hpp"

namespace cmplab {

/// Decomposition n = sum_k (2^{s_k} - 1) with s_1 >= s_2 >= ... and every
/// term at least the sum of all terms after it.
struct Expansion {
    std::vector<unsigned> exponents;

    std::uint64_t term(std::size_t k) const { return (std::uint64_t(1) << exponents[k]) - 1; }
    std::uint64_t sum() const;
};

/// Greedy expansion: each step takes the largest 2^s - 1 not exceeding the
/// remainder (which automatically dominates the tail). n = 0 yields the
/// empty expansion.
Expansion almost_binary_expansion(std::uint64_t n);

/// A sorted block of the partition.
struct Run {
    std::vector<Key> keys;  // ascending
    std::size_t block_size = 0;
};

/// Appends one full bottom level of dummy keys to a heapified block of
/// 2^s - 1 keys, growing it to 2^{s+1} - 1 slots. The 2^s dummies exceed
/// the block size, and being minimal they preserve heap order. Dummy ids
/// start at `first_dummy_id` in slot order.
HeapArray pad_with_dummies(HeapArray block, std::int64_t first_dummy_id);

/// Left-fold two-way merge of ascending runs, ordered largest first. A
/// two-run merge of lengths a and b reports at most a+b-1 comparisons,
/// tallied under Phase::Merge.
std::vector<Key> merge_runs(std::vector<Run> runs, Probe& probe);

/// The modified Heapsort: split the input sequentially into blocks sized by
/// the almost-binary expansion (largest first), heapify and dummy-pad each
/// block, sort it with Floyd pops, then merge the runs largest first.
std::vector<Key> heapsort_modified(std::vector<Key> keys, Probe& probe);

}  // namespace cmplab
