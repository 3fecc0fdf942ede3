#include "cmplab/heap_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmplab {

void max_heapify(HeapArray& heap, std::size_t i, Probe& probe, Phase phase) {
    const std::size_t n = heap.heap_size();
    if (i == 0 || i > n) throw std::out_of_range("max_heapify: index out of 1..heap_size");
    while (true) {
        const std::size_t l = HeapArray::left(i);
        const std::size_t r = HeapArray::right(i);
        std::size_t largest = i;
        if (l <= n && probe.less(heap.at(largest), heap.at(l), phase)) largest = l;
        if (r <= n && probe.less(heap.at(largest), heap.at(r), phase)) largest = r;
        if (largest == i) return;
        std::swap(heap.at(i), heap.at(largest));
        i = largest;
    }
}

void build_heap(HeapArray& heap, Probe& probe) {
    for (std::size_t i = heap.heap_size(); i >= 1; --i) {
        max_heapify(heap, i, probe, Phase::Build);
    }
}

std::size_t sift_down(HeapArray& heap, std::size_t i, Probe& probe, Phase phase) {
    const std::size_t n = heap.heap_size();
    if (i == 0 || i > n) throw std::out_of_range("sift_down: index out of 1..heap_size");
    while (true) {
        const std::size_t l = HeapArray::left(i);
        const std::size_t r = HeapArray::right(i);
        if (r <= n && probe.less(heap.at(l), heap.at(r), phase)) {
            heap.at(i) = heap.at(r);
            i = r;
        } else if (l <= n) {
            heap.at(i) = heap.at(l);
            i = l;
        } else {
            return i;
        }
    }
}

void sift_up(HeapArray& heap, std::size_t i, Probe& probe, Phase phase) {
    if (i == 0 || i > heap.heap_size()) {
        throw std::out_of_range("sift_up: index out of 1..heap_size");
    }
    while (i != 1) {
        const std::size_t p = HeapArray::parent(i);
        if (!probe.less(heap.at(p), heap.at(i), phase)) return;
        std::swap(heap.at(p), heap.at(i));
        i = p;
    }
}

void max_heapify_floyd(HeapArray& heap, std::size_t i, Probe& probe, Phase phase) {
    if (heap.heap_size() == 0) throw std::out_of_range("max_heapify_floyd: empty heap");
    const std::size_t j = sift_down(heap, i, probe, phase);
    const std::size_t last = heap.heap_size();
    if (j != last) {
        heap.at(j) = heap.at(last);
        sift_up(heap, j, probe, phase);
    }
}

namespace {

template <class PopStep>
std::vector<Key> run_sort_phase(HeapArray& heap, const PopObserver& observer, PopStep pop_step) {
    const std::size_t n = heap.heap_size();
    std::size_t pops = 0;
    while (heap.heap_size() > 0) {
        if (observer) observer(heap, pops);
        pop_step(heap);
        ++pops;
    }
    heap.set_heap_size(n);
    std::vector<Key> out = std::move(heap).release();
    heap = HeapArray{};
    return out;
}

}  // namespace

std::vector<Key> heapsort_classic(std::vector<Key> keys, Probe& probe,
                                  const PopObserver& observer) {
    HeapArray heap(std::move(keys));
    build_heap(heap, probe);
    return run_sort_phase(heap, observer, [&probe](HeapArray& h) {
        const std::size_t last = h.heap_size();
        std::swap(h.at(1), h.at(last));
        h.set_heap_size(last - 1);
        if (h.heap_size() > 0) max_heapify(h, 1, probe, Phase::Sort);
    });
}

std::vector<Key> floyd_sort_phase(HeapArray heap, Probe& probe, const PopObserver& observer) {
    return run_sort_phase(heap, observer, [&probe](HeapArray& h) {
        const std::size_t last = h.heap_size();
        const Key max = h.at(1);
        if (last > 1) max_heapify_floyd(h, 1, probe, Phase::Sort);
        h.slot(last) = max;
        h.set_heap_size(last - 1);
    });
}

std::vector<Key> heapsort_floyd(std::vector<Key> keys, Probe& probe, const PopObserver& observer) {
    HeapArray heap(std::move(keys));
    build_heap(heap, probe);
    return floyd_sort_phase(std::move(heap), probe, observer);
}

HeapArray construct_adversarial_heap(unsigned k) {
    if (k < 2) throw std::invalid_argument("construct_adversarial_heap: k must be >= 2");
    const std::size_t n = (std::size_t(1) << k) - 1;
    std::vector<std::int64_t> value(n + 1, 0);  // 1-indexed values 1..n

    std::int64_t v = static_cast<std::int64_t>(n);
    // Right spine gets the k largest values, root downward.
    for (unsigned d = 0; d < k; ++d) {
        value[(std::size_t(2) << d) - 1] = v--;
    }
    // Each spine node's left sibling gets the next k-1 values, top downward.
    for (unsigned d = 1; d < k; ++d) {
        value[(std::size_t(2) << d) - 2] = v--;
    }
    // Remaining positions take the remaining values in BFS order, largest
    // first; a BFS parent always precedes its children, so this is a heap.
    for (std::size_t i = 1; i <= n; ++i) {
        if (value[i] == 0) value[i] = v--;
    }

    std::vector<Key> keys(n);
    for (std::size_t i = 1; i <= n; ++i) keys[i - 1] = Key::real(value[i] - 1);
    return HeapArray(std::move(keys));
}

RedRange adversarial_red_range(unsigned k) {
    const std::int64_t n = (std::int64_t(1) << k) - 1;
    const std::int64_t r = 2 * static_cast<std::int64_t>(k) - 1;
    return RedRange{n - r, r};
}

bool is_premature(const HeapArray& heap, const RedRange& red) {
    if (heap.heap_size() == 0) return false;
    return !red.contains(heap.at(1));
}

}  // namespace cmplab
