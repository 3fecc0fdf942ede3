#include "cmplab/trie.hpp"

#include <stdexcept>
#include <unordered_set>

namespace cmplab {

PrefixTrie PrefixTrie::build(const std::vector<StringKey>& strings) {
    PrefixTrie t;
    if (strings.empty()) return t;
    std::unordered_set<std::string> seen;
    t.nodes_.push_back(Node{});  // root, empty prefix
    for (const auto& s : strings) {
        if (!seen.insert(s.bytes).second) {
            throw std::invalid_argument("PrefixTrie::build: duplicate string \"" + s.bytes + "\"");
        }
        std::size_t cur = 0;
        ++t.nodes_[cur].thickness;
        for (std::size_t d = 0; d < s.bytes.size(); ++d) {
            const char c = s.bytes[d];
            auto it = t.nodes_[cur].children.find(c);
            std::size_t next;
            if (it == t.nodes_[cur].children.end()) {
                next = t.nodes_.size();
                t.nodes_.push_back(Node{0, d + 1, {}});
                t.nodes_[cur].children.emplace(c, next);
            } else {
                next = it->second;
            }
            cur = next;
            ++t.nodes_[cur].thickness;
        }
    }
    return t;
}

PrefixTrie PrefixTrie::reduced() const {
    PrefixTrie out;
    if (nodes_.empty() || nodes_[0].thickness <= 1) return out;
    // Rebuild keeping only thickness > 1; children of dropped nodes are
    // dropped with them (thickness is non-increasing along paths).
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (old, new)
    out.nodes_.push_back(Node{nodes_[0].thickness, 0, {}});
    stack.push_back({0, 0});
    while (!stack.empty()) {
        auto [oi, ni] = stack.back();
        stack.pop_back();
        for (const auto& [c, child] : nodes_[oi].children) {
            if (nodes_[child].thickness <= 1) continue;
            const std::size_t nn = out.nodes_.size();
            out.nodes_.push_back(Node{nodes_[child].thickness, nodes_[child].depth, {}});
            out.nodes_[ni].children.emplace(c, nn);
            stack.push_back({child, nn});
        }
    }
    return out;
}

double PrefixTrie::predict_cost(const CostFunction& f) const {
    double sum = 0.0;
    for (const auto& n : nodes_) sum += f(n.thickness);
    return sum;
}

std::vector<std::pair<std::size_t, std::uint64_t>> PrefixTrie::depth_thickness_profile() const {
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.emplace_back(n.depth, n.thickness);
    return out;
}

std::uint64_t PrefixTrie::leaf_thickness_sum() const {
    std::uint64_t sum = 0;
    for (const auto& n : nodes_) {
        if (n.children.empty()) sum += n.thickness;
    }
    return sum;
}

}  // namespace cmplab
