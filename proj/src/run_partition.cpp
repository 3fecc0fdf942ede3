#include "cmplab/run_partition.hpp"

#include <cassert>

namespace cmplab {

std::uint64_t Expansion::sum() const {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < exponents.size(); ++k) s += term(k);
    return s;
}

Expansion almost_binary_expansion(std::uint64_t n) {
    Expansion e;
    while (n > 0) {
        unsigned s = 1;
        while (((std::uint64_t(1) << (s + 1)) - 1) <= n) ++s;
        e.exponents.push_back(s);
        n -= (std::uint64_t(1) << s) - 1;
    }
    return e;
}

HeapArray pad_with_dummies(HeapArray block, std::int64_t first_dummy_id) {
    const std::size_t b = block.heap_size();
    assert(block.slot_count() == b);
    std::size_t target = 1;
    while (target - 1 < b) target *= 2;  // target = 2^s with 2^s - 1 = b
    const std::size_t padded = 2 * target - 1;
    std::int64_t id = first_dummy_id;
    for (std::size_t i = b; i < padded; ++i) block.append_slot(Key::dummy(id++));
    block.set_heap_size(padded);
    return block;
}

namespace {

std::vector<Key> merge_two(const std::vector<Key>& a, const std::vector<Key>& b, Probe& probe) {
    std::vector<Key> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (probe.less(b[j], a[i], Phase::Merge)) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace

std::vector<Key> merge_runs(std::vector<Run> runs, Probe& probe) {
    if (runs.empty()) return {};
    std::vector<Key> acc = std::move(runs.front().keys);
    for (std::size_t k = 1; k < runs.size(); ++k) {
        acc = merge_two(acc, runs[k].keys, probe);
    }
    return acc;
}

std::vector<Key> heapsort_modified(std::vector<Key> keys, Probe& probe) {
    const Expansion expansion = almost_binary_expansion(keys.size());
    std::vector<Run> runs;
    runs.reserve(expansion.exponents.size());

    std::size_t offset = 0;
    std::int64_t dummy_id = 0;
    for (std::size_t k = 0; k < expansion.exponents.size(); ++k) {
        const std::size_t block_size = static_cast<std::size_t>(expansion.term(k));
        std::vector<Key> block(keys.begin() + offset, keys.begin() + offset + block_size);
        offset += block_size;

        HeapArray heap(std::move(block));
        build_heap(heap, probe);
        heap = pad_with_dummies(std::move(heap), dummy_id);
        dummy_id += static_cast<std::int64_t>(heap.heap_size() - block_size);

        std::vector<Key> sorted = floyd_sort_phase(std::move(heap), probe);
        // The sorted padded array is [dummies..., block ascending]; keep the
        // real tail only.
        std::vector<Key> run_keys(sorted.end() - block_size, sorted.end());
        runs.push_back(Run{std::move(run_keys), block_size});
    }

    return merge_runs(std::move(runs), probe);
}

}  // namespace cmplab
