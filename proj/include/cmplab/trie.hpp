#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cmplab/strings.hpp"

namespace cmplab {

/// Cost charged per trie node as a function of its thickness.
using CostFunction = std::function<double(std::uint64_t)>;

/// Trie over all prefixes of a string set, kept purely as an analysis
/// parametrization; the sorters never see it. Each node records its
/// thickness: the number of corpus strings having that prefix. The empty
/// prefix is a node and is included in cost sums.
class PrefixTrie {
public:
    struct Node {
        std::uint64_t thickness = 0;
        std::size_t depth = 0;  // prefix length
        std::map<char, std::size_t> children;
    };

    /// Builds the trie. Throws std::invalid_argument on duplicate strings.
    static PrefixTrie build(const std::vector<StringKey>& strings);

    /// Trie induced by the nodes with thickness > 1; may be empty.
    PrefixTrie reduced() const;

    std::size_t node_count() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    /// Exact sum of f(thickness) over every node, root included.
    double predict_cost(const CostFunction& f) const;

    std::uint64_t root_thickness() const { return nodes_.empty() ? 0 : nodes_[0].thickness; }

    /// (prefix length, thickness) per node, preorder.
    std::vector<std::pair<std::size_t, std::uint64_t>> depth_thickness_profile() const;

    /// Sum of thickness over leaf nodes.
    std::uint64_t leaf_thickness_sum() const;

private:
    std::vector<Node> nodes_;  // index 0 = root when non-empty
};

}  // namespace cmplab
