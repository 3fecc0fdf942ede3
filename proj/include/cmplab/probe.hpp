#pragma once

#include <compare>
#include <vector>

#include "cmplab/key.hpp"
#include "cmplab/tally.hpp"

namespace cmplab {

struct ComparisonRecord {
    Key a;
    Key b;
    Phase phase;
};

/// The single funnel through which every key comparison flows. Each call
/// increments exactly one color-class counter in the given phase. Call
/// sites supply the phase; nothing is inferred. An optional recorder
/// captures the raw comparison stream so a run can be re-tallied.
class Probe {
public:
    Probe(RedRange red, TallySheet& sheet) : red_(red), sheet_(&sheet) {}

    std::strong_ordering compare(const Key& a, const Key& b, Phase phase) {
        sheet_->add(phase, classify(a, b, red_));
        if (recorder_) recorder_->push_back({a, b, phase});
        return key_compare(a, b);
    }

    bool less(const Key& a, const Key& b, Phase phase) {
        return compare(a, b, phase) == std::strong_ordering::less;
    }

    void attach_recorder(std::vector<ComparisonRecord>* rec) { recorder_ = rec; }

    const RedRange& red_range() const { return red_; }
    const TallySheet& sheet() const { return *sheet_; }

private:
    RedRange red_;
    TallySheet* sheet_;
    std::vector<ComparisonRecord>* recorder_ = nullptr;
};

}  // namespace cmplab
