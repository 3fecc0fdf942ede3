#include "cmplab/binomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cmplab {

bool BinomialTree::heap_ordered() const {
    for (const auto& c : children) {
        if (key_less(root, c.root)) return false;
        if (!c.heap_ordered()) return false;
    }
    return true;
}

bool BinomialTree::shape_valid() const {
    const unsigned k = order();
    for (unsigned i = 0; i < k; ++i) {
        if (children[i].order() != k - 1 - i) return false;
        if (!children[i].shape_valid()) return false;
    }
    return true;
}

bool BinomialTree::contains(const Key& k) const {
    if (key_compare(root, k) == std::strong_ordering::equal) return true;
    for (const auto& c : children) {
        if (c.contains(k)) return true;
    }
    return false;
}

RootList RootList::singleton(Key k) {
    RootList q;
    q.append_tree(BinomialTree::singleton(k));
    return q;
}

bool RootList::invariants_hold() const {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i > 0 && trees_[i].size() <= trees_[i - 1].size()) return false;
        if (!trees_[i].shape_valid() || !trees_[i].heap_ordered()) return false;
        sum += trees_[i].size();
    }
    return sum == count_;
}

void RootList::append_tree(BinomialTree t) {
    if (!trees_.empty() && trees_.back().size() >= t.size()) {
        throw std::logic_error("RootList::append_tree: size order violated");
    }
    count_ += t.size();
    trees_.push_back(std::move(t));
}

BinomialTree RootList::take_tree(std::size_t index) {
    if (index >= trees_.size()) throw std::out_of_range("RootList::take_tree");
    BinomialTree t = std::move(trees_[index]);
    trees_.erase(trees_.begin() + static_cast<std::ptrdiff_t>(index));
    count_ -= t.size();
    return t;
}

std::vector<BinomialTree> RootList::take_all() && {
    count_ = 0;
    return std::move(trees_);
}

BinomialTree merge_trees(BinomialTree a, BinomialTree b, Probe& probe, Phase phase) {
    if (a.size() != b.size()) throw std::invalid_argument("merge_trees: size mismatch");
    if (probe.less(a.root, b.root, phase)) {
        b.children.insert(b.children.begin(), std::move(a));
        return b;
    }
    a.children.insert(a.children.begin(), std::move(b));
    return a;
}

namespace {

// Add step of the binary addition: combines the next tree with the carry.
// Same size: they merge into the new carry. Different size (carry is then
// strictly smaller): both go to the output list in ascending order.
std::optional<BinomialTree> add_step(RootList& out, BinomialTree node,
                                     std::optional<BinomialTree> carry, Probe& probe,
                                     Phase phase) {
    if (!carry) {
        out.append_tree(std::move(node));
        return std::nullopt;
    }
    if (carry->size() == node.size()) {
        return merge_trees(std::move(node), std::move(*carry), probe, phase);
    }
    out.append_tree(std::move(*carry));
    out.append_tree(std::move(node));
    return std::nullopt;
}

}  // namespace

RootList merge_root_lists(RootList a, RootList b, Probe& probe, Phase phase) {
    std::vector<BinomialTree> ta = std::move(a).take_all();
    std::vector<BinomialTree> tb = std::move(b).take_all();
    RootList out;
    std::optional<BinomialTree> carry;
    std::size_t i = 0, j = 0;

    while (i < ta.size() && j < tb.size()) {
        if (ta[i].size() == tb[j].size()) {
            if (carry) out.append_tree(std::move(*carry));
            carry = merge_trees(std::move(ta[i++]), std::move(tb[j++]), probe, phase);
        } else if (ta[i].size() < tb[j].size()) {
            carry = add_step(out, std::move(ta[i++]), std::move(carry), probe, phase);
        } else {
            carry = add_step(out, std::move(tb[j++]), std::move(carry), probe, phase);
        }
    }
    while (i < ta.size()) carry = add_step(out, std::move(ta[i++]), std::move(carry), probe, phase);
    while (j < tb.size()) carry = add_step(out, std::move(tb[j++]), std::move(carry), probe, phase);
    if (carry) out.append_tree(std::move(*carry));
    return out;
}

RootList insert(RootList q, Key k, Probe& probe, Phase phase) {
    return merge_root_lists(std::move(q), RootList::singleton(k), probe, phase);
}

FindMaxResult find_max(const RootList& q, Probe& probe, Phase phase) {
    if (q.empty()) throw std::out_of_range("find_max: empty queue");
    const auto& trees = q.trees();
    std::size_t best = trees.size() - 1;  // scan starts at the largest tree
    std::size_t best_scan_pos = 0;
    for (std::size_t scan = 1; scan < trees.size(); ++scan) {
        const std::size_t i = trees.size() - 1 - scan;
        if (probe.less(trees[best].root, trees[i].root, phase)) {
            best = i;
            best_scan_pos = scan;
        }
    }
    return FindMaxResult{best, best_scan_pos};
}

std::pair<Key, RootList> pop_max(RootList q, Probe& probe) {
    const FindMaxResult fm = find_max(q, probe, Phase::FindMax);
    BinomialTree top = q.take_tree(fm.tree_index);

    RootList children;
    for (auto it = top.children.rbegin(); it != top.children.rend(); ++it) {
        children.append_tree(std::move(*it));  // ascending sizes 1, 2, ..., 2^{s-1}
    }
    RootList rest = merge_root_lists(std::move(q), std::move(children), probe, Phase::PopMerge);
    return {top.root, std::move(rest)};
}

std::vector<Key> binomial_heapsort(std::vector<Key> keys, Probe& probe,
                                   const QueueObserver& observer) {
    RootList q;
    for (const Key& k : keys) q = insert(std::move(q), k, probe, Phase::Build);

    std::vector<Key> out(keys.size());
    for (std::size_t pops = 0; pops < keys.size(); ++pops) {
        if (observer) observer(q, pops);
        auto [max, rest] = pop_max(std::move(q), probe);
        q = std::move(rest);
        out[keys.size() - 1 - pops] = max;
    }
    return out;
}

namespace {

std::string key_text(const Key& k) {
    if (k.is_dummy) return "d" + std::to_string(k.dummy_id);
    return std::to_string(k.rank);
}

}  // namespace

std::string canonical_serialization(const BinomialTree& t) {
    std::vector<const BinomialTree*> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(), [](const BinomialTree* x, const BinomialTree* y) {
        if (x->size() != y->size()) return x->size() < y->size();
        return key_less(x->root, y->root);
    });
    std::string s = "(" + key_text(t.root);
    for (const auto* c : kids) s += canonical_serialization(*c);
    s += ")";
    return s;
}

std::string canonical_serialization(const RootList& q) {
    std::vector<const BinomialTree*> roots;
    roots.reserve(q.trees().size());
    for (const auto& t : q.trees()) roots.push_back(&t);
    std::sort(roots.begin(), roots.end(), [](const BinomialTree* x, const BinomialTree* y) {
        if (x->size() != y->size()) return x->size() < y->size();
        return key_less(x->root, y->root);
    });
    std::string s = "{";
    for (const auto* t : roots) s += canonical_serialization(*t);
    s += "}";
    return s;
}

}  // namespace cmplab
