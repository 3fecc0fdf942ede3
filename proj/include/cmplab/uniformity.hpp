#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmplab/probe.hpp"
#include "cmplab/rng.hpp"

namespace cmplab {

/// Occurrence counts keyed by a canonical structure serialization.
struct DistributionCensus {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;

    bool uniform() const;
    std::uint64_t min_count() const;
    std::uint64_t max_count() const;
};

/// Runs build_heap on every permutation of {1..n} and tallies the resulting
/// heaps. Exhaustive; refuses n > 9.
DistributionCensus census_buildheap(unsigned n);

/// Canonical-forest census over all n! insertion orders into a binomial
/// queue. Exhaustive; refuses n > 6.
DistributionCensus census_binomial_build(unsigned n);

struct PopMaxCensusReport {
    DistributionCensus census;          // over (n-1)-element configurations
    std::uint64_t source_configs = 0;   // distinct n-element configurations
    double max_min_ratio = 0.0;         // 1.0 means exactly uniform
    bool uniform = false;
};

/// Applies pop_max once to each distinct n-element configuration (uniform
/// weight) and tallies the resulting (n-1)-element configurations.
/// Exhaustive; refuses n > 6.
PopMaxCensusReport census_binomial_popmax(unsigned n);

/// Shape-flexible linked binary max-heap for the alternate build model;
/// reuses Key and the probe.
class PointerHeap {
public:
    /// Alternate-model insert: a key beating the root takes its place and
    /// the displaced key re-routes; otherwise the key descends into the
    /// left or right subtree of each node with probability 1/2.
    /// Comparisons are probed under the given phase.
    void insert_alternate(Key x, SplitMix64& rng, Probe& probe, Phase phase);

    /// Removes the maximum; the hole sifts down by promoting the larger
    /// child (one probed comparison per two-child node, none otherwise).
    std::optional<Key> pop_max(Probe& probe, Phase phase);

    bool heap_ordered() const;
    std::size_t size() const { return size_; }
    std::size_t left_subtree_size() const;

    /// Linked copy of an array heap's live prefix, same complete shape and
    /// keys; lets tests drive both representations through one hole
    /// sift-down and compare tallies.
    static PointerHeap mirror_of(const class HeapArray& heap);

private:
    struct Node {
        Key key;
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;
    };
    static std::size_t count(const Node* n);
    static bool ordered(const Node* n);

    std::unique_ptr<Node> root_;
    std::size_t size_ = 0;
};

struct MatureCensusReport {
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    /// mean_pop_comparisons[s] = mean probed comparisons of the pop taken
    /// at heap size s (s = n down to 1).
    std::vector<double> mean_pop_comparisons;
    double mean_total = 0.0;      // mean comparisons of a full build+pop-out, pops only
    double mean_per_pop = 0.0;    // mean_total / n
    double first_pop_mean = 0.0;  // mean comparisons of the pop at size n
};

/// Builds heaps of N keys with insert_alternate and pops them empty,
/// measuring probed comparisons per pop. All keys are red (r = N).
MatureCensusReport mature_phase_census(std::uint64_t N, std::uint64_t trials, std::uint64_t seed);

}  // namespace cmplab
