#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cmplab {

/// A byte string compared lexicographically.
struct StringKey {
    std::string bytes;
};

struct StringCompareResult {
    std::strong_ordering order;
    std::uint64_t symbol_cost;
};

/// Lexicographic comparison that reports its symbol cost. Let L be the
/// length of the longest common prefix. When both strings still have a byte
/// at position L the cost is L+1 (the mismatching pair is inspected); when
/// one string ends at L the end is detected without a symbol comparison and
/// the cost is L. Identical strings of length L cost L.
StringCompareResult string_compare(const StringKey& a, const StringKey& b);

/// Reads a newline-delimited corpus. Empty lines and duplicate strings are
/// rejected with std::runtime_error naming the offending line.
std::vector<StringKey> load_corpus(const std::string& path);

}  // namespace cmplab
