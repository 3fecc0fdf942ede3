#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cmplab/heap_array.hpp"
#include "cmplab/probe.hpp"

namespace cmplab {

/// Restores heap order under node i, assuming both subtrees of i are
/// heap-ordered. At most two probed comparisons per level descended.
void max_heapify(HeapArray& heap, std::size_t i, Probe& probe, Phase phase);

/// Calls max_heapify on every index from heap_size down to 1. Comparisons
/// land in Phase::Build.
void build_heap(HeapArray& heap, Probe& probe);

/// Position i holds a hole. Promotes the larger child into the hole level
/// by level (one comparison when two children exist, none when one child)
/// and returns the hole's final index at the bottom.
std::size_t sift_down(HeapArray& heap, std::size_t i, Probe& probe, Phase phase);

/// Moves the key at i up while it beats its parent; one comparison per
/// level ascended plus the final failing one. No comparison when i is the
/// root.
void sift_up(HeapArray& heap, std::size_t i, Probe& probe, Phase phase);

/// Floyd pop step: the key at i is logically removed; sifts the hole down,
/// moves the last heap element into it, and sifts that element up. Does not
/// touch heap_size; the caller shrinks it. When the hole ends at the last
/// slot there is nothing to move and no sift-up happens.
void max_heapify_floyd(HeapArray& heap, std::size_t i, Probe& probe, Phase phase);

/// Observer invoked before each pop of the sort phase, with the heap in its
/// pre-pop state and the number of pops already done.
using PopObserver = std::function<void(const HeapArray&, std::size_t)>;

/// Heapsort with the classic two-comparison MaxHeapify pops. Build-phase
/// comparisons are tallied under Build, pops under Sort. Output ascending.
std::vector<Key> heapsort_classic(std::vector<Key> keys, Probe& probe,
                                  const PopObserver& observer = {});

/// Heapsort popping via max_heapify_floyd. Output ascending.
std::vector<Key> heapsort_floyd(std::vector<Key> keys, Probe& probe,
                                const PopObserver& observer = {});

/// Runs just the pop loop of the Floyd variant on an already-built heap.
/// Returns the keys in ascending order.
std::vector<Key> floyd_sort_phase(HeapArray heap, Probe& probe,
                                  const PopObserver& observer = {});

/// The degenerate n = 2^k - 1 heap whose top r = 2(k-1)+1 ranks sit on the
/// right spine and the spine nodes' left siblings: the spine holds the k
/// largest keys in root-to-leaf order, the siblings the next k-1, so every
/// Floyd pop walks the full spine comparing red against red. Requires
/// k >= 2.
HeapArray construct_adversarial_heap(unsigned k);

/// Red range used by construct_adversarial_heap(k): the top 2k-1 ranks.
RedRange adversarial_red_range(unsigned k);

/// A heap is premature while its root is blue, mature once a red key
/// reaches the top.
bool is_premature(const HeapArray& heap, const RedRange& red);

}  // namespace cmplab
