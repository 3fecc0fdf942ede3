#include "cmplab/tally.hpp"

#include <cstdio>

namespace cmplab {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Build: return "build";
        case Phase::Sort: return "sort";
        case Phase::Merge: return "merge";
        case Phase::FindMax: return "find-max";
        case Phase::PopMerge: return "pop-merge";
    }
    return "?";
}

std::uint64_t TallySheet::phase_total(Phase p) const {
    std::uint64_t t = 0;
    for (std::size_t c = 0; c < kColorCount; ++c) {
        t += counts_[static_cast<std::size_t>(p)][c];
    }
    return t;
}

std::uint64_t TallySheet::color_total(ColorClass c) const {
    std::uint64_t t = 0;
    for (std::size_t p = 0; p < kPhaseCount; ++p) {
        t += counts_[p][static_cast<std::size_t>(c)];
    }
    return t;
}

std::uint64_t TallySheet::total() const {
    std::uint64_t t = 0;
    for (std::size_t p = 0; p < kPhaseCount; ++p) {
        for (std::size_t c = 0; c < kColorCount; ++c) t += counts_[p][c];
    }
    return t;
}

TallySheet& TallySheet::operator+=(const TallySheet& other) {
    for (std::size_t p = 0; p < kPhaseCount; ++p) {
        for (std::size_t c = 0; c < kColorCount; ++c) counts_[p][c] += other.counts_[p][c];
    }
    return *this;
}

std::string tally_csv_header() {
    return "seed,n,r,lo,algo,phase,red_red,red_blue,blue_blue,dummy,total";
}

std::string tally_csv_row(const RunContext& ctx, const TallySheet& sheet, const Phase* phase) {
    std::uint64_t rr, rb, bb, dm;
    const char* label;
    if (phase) {
        rr = sheet.count(*phase, ColorClass::RedRed);
        rb = sheet.count(*phase, ColorClass::RedBlue);
        bb = sheet.count(*phase, ColorClass::BlueBlue);
        dm = sheet.count(*phase, ColorClass::DummyInvolved);
        label = phase_name(*phase);
    } else {
        rr = sheet.color_total(ColorClass::RedRed);
        rb = sheet.color_total(ColorClass::RedBlue);
        bb = sheet.color_total(ColorClass::BlueBlue);
        dm = sheet.color_total(ColorClass::DummyInvolved);
        label = "all";
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%llu,%llu,%llu,%lld,%s,%s,%llu,%llu,%llu,%llu,%llu",
                  static_cast<unsigned long long>(ctx.seed),
                  static_cast<unsigned long long>(ctx.n),
                  static_cast<unsigned long long>(ctx.r), static_cast<long long>(ctx.lo),
                  ctx.algo.c_str(), label, static_cast<unsigned long long>(rr),
                  static_cast<unsigned long long>(rb), static_cast<unsigned long long>(bb),
                  static_cast<unsigned long long>(dm),
                  static_cast<unsigned long long>(rr + rb + bb + dm));
    return buf;
}

}  // namespace cmplab
