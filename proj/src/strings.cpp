#include "cmplab/strings.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace cmplab {

StringCompareResult string_compare(const StringKey& a, const StringKey& b) {
    const std::string& x = a.bytes;
    const std::string& y = b.bytes;
    const std::size_t limit = std::min(x.size(), y.size());
    std::size_t lcp = 0;
    while (lcp < limit && x[lcp] == y[lcp]) ++lcp;
    if (lcp < x.size() && lcp < y.size()) {
        // Mismatching symbols inspected: cost LCP+1.
        const auto ord = static_cast<unsigned char>(x[lcp]) < static_cast<unsigned char>(y[lcp])
                             ? std::strong_ordering::less
                             : std::strong_ordering::greater;
        return {ord, lcp + 1};
    }
    // One string ended: detected without a symbol comparison, cost LCP.
    if (x.size() == y.size()) return {std::strong_ordering::equal, lcp};
    return {x.size() < y.size() ? std::strong_ordering::less : std::strong_ordering::greater, lcp};
}

std::vector<StringKey> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus: " + path);
    std::vector<StringKey> out;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty line");
        }
        if (!seen.insert(line).second) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate string");
        }
        out.push_back(StringKey{line});
    }
    return out;
}

}  // namespace cmplab
