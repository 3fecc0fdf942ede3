#include "cmplab/uniformity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cmplab/binomial.hpp"
#include "cmplab/heap_core.hpp"

namespace cmplab {

bool DistributionCensus::uniform() const {
    return !counts.empty() && min_count() == max_count();
}

std::uint64_t DistributionCensus::min_count() const {
    std::uint64_t m = UINT64_MAX;
    for (const auto& [k, v] : counts) m = std::min(m, v);
    return counts.empty() ? 0 : m;
}

std::uint64_t DistributionCensus::max_count() const {
    std::uint64_t m = 0;
    for (const auto& [k, v] : counts) m = std::max(m, v);
    return m;
}

namespace {

std::string heap_key(const HeapArray& h) {
    std::string s;
    for (std::size_t i = 1; i <= h.heap_size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(h.at(i).rank);
    }
    return s;
}

template <class Fn>
void for_each_permutation(unsigned n, Fn fn) {
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

DistributionCensus census_buildheap(unsigned n) {
    if (n > 9) throw std::invalid_argument("census_buildheap: exhaustive cap is n <= 9");
    DistributionCensus census;
    for_each_permutation(n, [&census, n](const std::vector<std::int64_t>& perm) {
        std::vector<Key> keys;
        keys.reserve(n);
        for (auto r : perm) keys.push_back(Key::real(r));
        TallySheet sheet;
        Probe probe(RedRange{0, static_cast<std::int64_t>(n)}, sheet);
        HeapArray heap(std::move(keys));
        build_heap(heap, probe);
        ++census.counts[heap_key(heap)];
        ++census.total;
    });
    return census;
}

namespace {

RootList queue_from_order(const std::vector<std::int64_t>& perm) {
    TallySheet sheet;
    Probe probe(RedRange{0, static_cast<std::int64_t>(perm.size())}, sheet);
    RootList q;
    for (auto r : perm) q = insert(std::move(q), Key::real(r), probe, Phase::Build);
    return q;
}

}  // namespace

DistributionCensus census_binomial_build(unsigned n) {
    if (n > 6) throw std::invalid_argument("census_binomial_build: exhaustive cap is n <= 6");
    DistributionCensus census;
    for_each_permutation(n, [&census](const std::vector<std::int64_t>& perm) {
        ++census.counts[canonical_serialization(queue_from_order(perm))];
        ++census.total;
    });
    return census;
}

PopMaxCensusReport census_binomial_popmax(unsigned n) {
    if (n == 0 || n > 6) throw std::invalid_argument("census_binomial_popmax: need 1 <= n <= 6");
    // Collect one representative queue per distinct configuration.
    std::map<std::string, RootList> configs;
    for_each_permutation(n, [&configs](const std::vector<std::int64_t>& perm) {
        RootList q = queue_from_order(perm);
        configs.emplace(canonical_serialization(q), std::move(q));
    });

    PopMaxCensusReport rep;
    rep.source_configs = configs.size();
    for (auto& [key, q] : configs) {
        TallySheet sheet;
        Probe probe(RedRange{0, n}, sheet);
        auto [max, rest] = pop_max(std::move(q), probe);
        ++rep.census.counts[canonical_serialization(rest)];
        ++rep.census.total;
    }
    rep.max_min_ratio = rep.census.counts.empty()
                            ? 0.0
                            : static_cast<double>(rep.census.max_count()) /
                                  static_cast<double>(rep.census.min_count());
    rep.uniform = rep.census.uniform();
    return rep;
}

// ---------------------------------------------------------------- PointerHeap

void PointerHeap::insert_alternate(Key x, SplitMix64& rng, Probe& probe, Phase phase) {
    Node* cur = root_.get();
    if (!cur) {
        root_ = std::make_unique<Node>(Node{x, nullptr, nullptr});
        ++size_;
        return;
    }
    while (true) {
        if (probe.less(cur->key, x, phase)) std::swap(cur->key, x);
        std::unique_ptr<Node>& slot = rng.coin() ? cur->left : cur->right;
        if (!slot) {
            slot = std::make_unique<Node>(Node{x, nullptr, nullptr});
            ++size_;
            return;
        }
        cur = slot.get();
    }
}

std::optional<Key> PointerHeap::pop_max(Probe& probe, Phase phase) {
    if (!root_) return std::nullopt;
    const Key max = root_->key;
    // Hole sift-down: promote the larger child into the hole; the hole's
    // final node is unlinked.
    std::unique_ptr<Node>* hole = &root_;
    while (true) {
        Node* n = hole->get();
        std::unique_ptr<Node>* next = nullptr;
        if (n->left && n->right) {
            next = probe.less(n->left->key, n->right->key, phase) ? &n->right : &n->left;
        } else if (n->left) {
            next = &n->left;
        } else if (n->right) {
            next = &n->right;
        }
        if (!next) break;
        n->key = (*next)->key;
        hole = next;
    }
    hole->reset();
    --size_;
    return max;
}

bool PointerHeap::ordered(const Node* n) {
    if (!n) return true;
    if (n->left && key_less(n->key, n->left->key)) return false;
    if (n->right && key_less(n->key, n->right->key)) return false;
    return ordered(n->left.get()) && ordered(n->right.get());
}

bool PointerHeap::heap_ordered() const { return ordered(root_.get()); }

std::size_t PointerHeap::count(const Node* n) {
    if (!n) return 0;
    return 1 + count(n->left.get()) + count(n->right.get());
}

std::size_t PointerHeap::left_subtree_size() const {
    return root_ ? count(root_->left.get()) : 0;
}

PointerHeap PointerHeap::mirror_of(const HeapArray& heap) {
    PointerHeap out;
    if (heap.heap_size() == 0) return out;
    struct Builder {
        const HeapArray& h;
        std::unique_ptr<Node> build(std::size_t i) {
            if (i > h.heap_size()) return nullptr;
            auto n = std::make_unique<Node>(Node{h.at(i), nullptr, nullptr});
            n->left = build(HeapArray::left(i));
            n->right = build(HeapArray::right(i));
            return n;
        }
    } builder{heap};
    out.root_ = builder.build(1);
    out.size_ = heap.heap_size();
    return out;
}

MatureCensusReport mature_phase_census(std::uint64_t N, std::uint64_t trials, std::uint64_t seed) {
    MatureCensusReport rep;
    rep.n = N;
    rep.trials = trials;
    rep.mean_pop_comparisons.assign(N + 1, 0.0);

    SplitMix64 rng(seed);
    double total = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TallySheet sheet;
        Probe probe(RedRange{0, static_cast<std::int64_t>(N)}, sheet);  // all keys red
        std::vector<Key> keys = make_ranked_keys(N);
        fisher_yates(std::span<Key>(keys.data(), keys.size()), rng.next());

        PointerHeap heap;
        for (const Key& k : keys) heap.insert_alternate(k, rng, probe, Phase::Build);

        std::uint64_t before = sheet.phase_total(Phase::Sort);
        for (std::uint64_t s = N; s >= 1; --s) {
            heap.pop_max(probe, Phase::Sort);
            const std::uint64_t after = sheet.phase_total(Phase::Sort);
            rep.mean_pop_comparisons[s] += static_cast<double>(after - before);
            before = after;
        }
        total += static_cast<double>(sheet.phase_total(Phase::Sort));
    }
    for (auto& v : rep.mean_pop_comparisons) v /= static_cast<double>(trials);
    rep.mean_total = total / static_cast<double>(trials);
    rep.mean_per_pop = N ? rep.mean_total / static_cast<double>(N) : 0.0;
    rep.first_pop_mean = N ? rep.mean_pop_comparisons[N] : 0.0;
    return rep;
}

}  // namespace cmplab
