#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cmplab/probe.hpp"

namespace cmplab {

/// Heap-ordered binomial tree of size 2^order with children held in
/// descending size order (2^{order-1}, ..., 2, 1).
struct BinomialTree {
    Key root;
    std::vector<BinomialTree> children;

    unsigned order() const { return static_cast<unsigned>(children.size()); }
    std::uint64_t size() const { return std::uint64_t(1) << order(); }

    static BinomialTree singleton(Key k) { return BinomialTree{k, {}}; }

    bool heap_ordered() const;
    bool shape_valid() const;
    bool contains(const Key& k) const;
};

/// Size-ordered forest of binomial trees, at most one tree per size,
/// stored smallest to largest. Tree sizes are exactly the binary expansion
/// of the element count.
class RootList {
public:
    RootList() = default;

    static RootList singleton(Key k);

    const std::vector<BinomialTree>& trees() const { return trees_; }
    std::uint64_t count() const { return count_; }
    bool empty() const { return trees_.empty(); }

    bool invariants_hold() const;

    /// Used by the merge machinery; appends a tree strictly larger than all
    /// current ones.
    void append_tree(BinomialTree t);

    BinomialTree take_tree(std::size_t index);

    std::vector<BinomialTree> take_all() &&;

private:
    std::vector<BinomialTree> trees_;
    std::uint64_t count_ = 0;
};

/// Joins two trees of equal size with exactly one probed comparison; the
/// larger root adopts the other as its first (largest) child. Throws on a
/// size mismatch.
BinomialTree merge_trees(BinomialTree a, BinomialTree b, Probe& probe, Phase phase);

/// Binary-addition merge of two root lists; comparisons happen only inside
/// merge_trees. A carry that outlives both lists is flushed at the end.
RootList merge_root_lists(RootList a, RootList b, Probe& probe, Phase phase);

RootList insert(RootList q, Key k, Probe& probe, Phase phase);

struct FindMaxResult {
    std::size_t tree_index;   // index into trees() (ascending-size storage)
    std::size_t scan_length;  // roots inspected before the maximum, scanning largest to smallest
};

/// Linear scan over the roots from the largest tree to the smallest;
/// comparisons are tallied under the given phase. Throws on an empty queue.
FindMaxResult find_max(const RootList& q, Probe& probe, Phase phase);

/// Removes the maximal root, re-merges its children (ascending sizes 1, 2,
/// ..., 2^{s-1}) into the rest under Phase::PopMerge. The find itself is
/// tallied under Phase::FindMax.
std::pair<Key, RootList> pop_max(RootList q, Probe& probe);

/// Observer invoked before each pop with the queue and pops already done.
using QueueObserver = std::function<void(const RootList&, std::size_t)>;

/// n inserts (Phase::Build) followed by n pops (FindMax / PopMerge).
/// Output ascending.
std::vector<Key> binomial_heapsort(std::vector<Key> keys, Probe& probe,
                                   const QueueObserver& observer = {});

/// Deterministic parenthesized text form; children (and trees) listed in
/// ascending (size, root rank) order. Two queues serialize equally iff they
/// are the same heap-ordered forest.
std::string canonical_serialization(const BinomialTree& t);
std::string canonical_serialization(const RootList& q);

}  // namespace cmplab
