#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cmplab/key.hpp"

namespace cmplab {

enum class Phase : unsigned { Build = 0, Sort, Merge, FindMax, PopMerge };
inline constexpr std::size_t kPhaseCount = 5;

enum class ColorClass : unsigned { RedRed = 0, RedBlue, BlueBlue, DummyInvolved };
inline constexpr std::size_t kColorCount = 4;

const char* phase_name(Phase p);

inline ColorClass classify(const Key& a, const Key& b, const RedRange& red) {
    if (a.is_dummy || b.is_dummy) return ColorClass::DummyInvolved;
    const bool ar = red.contains(a);
    const bool br = red.contains(b);
    if (ar && br) return ColorClass::RedRed;
    if (ar || br) return ColorClass::RedBlue;
    return ColorClass::BlueBlue;
}

/// Comparison counters partitioned by phase and operand color class.
class TallySheet {
public:
    void add(Phase p, ColorClass c) {
        ++counts_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
    }

    std::uint64_t count(Phase p, ColorClass c) const {
        return counts_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
    }

    std::uint64_t phase_total(Phase p) const;
    std::uint64_t color_total(ColorClass c) const;
    std::uint64_t total() const;

    TallySheet& operator+=(const TallySheet& other);

private:
    std::array<std::array<std::uint64_t, kColorCount>, kPhaseCount> counts_{};
};

/// Context identifying the run a sheet belongs to; combined with the sheet
/// it renders the CSV rows of the experiment output.
struct RunContext {
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::int64_t lo = 0;
    std::string algo;
};

std::string tally_csv_header();

/// One CSV row for a single phase of the sheet; `phase == nullptr` renders
/// the cross-phase totals with phase label "all".
std::string tally_csv_row(const RunContext& ctx, const TallySheet& sheet, const Phase* phase);

}  // namespace cmplab
