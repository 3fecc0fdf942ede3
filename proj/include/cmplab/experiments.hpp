#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmplab/strings.hpp"
#include "cmplab/tally.hpp"

namespace cmplab {

enum class Algo { Classic, Floyd, Modified, Binomial, QuicksortStrings };

const char* algo_name(Algo a);
std::optional<Algo> parse_algo(const std::string& name);

struct ExperimentConfig {
    Algo algo = Algo::Floyd;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> r_values;     // one entry = single run, more = sweep
    std::optional<std::int64_t> lo;          // red range offset; default n - r
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::vector<StringKey> corpus;           // for Algo::QuicksortStrings
};

/// Least-squares fit of mean ~ c * r log2 r + b * r over an r-sweep,
/// solved by the 2x2 normal equations.
struct FitResult {
    double c_hat = 0.0;
    double b_hat = 0.0;
    double residual_norm = 0.0;
};

FitResult fit_rlogr(const std::vector<std::pair<std::uint64_t, double>>& points);

/// Slope of log y against log x by ordinary least squares.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

struct SweepPoint {
    std::uint64_t r = 0;
    double mean_red_red = 0.0;        // all phases
    double mean_red_red_build = 0.0;
    double mean_red_red_sort = 0.0;
    double mean_red_red_merge = 0.0;  // merge + find-max + pop-merge
    double mean_dummy = 0.0;
    double mean_total = 0.0;
    double mean_premature_red_red = 0.0;  // binary sorts: before the first red root
    double mean_mature_red_red = 0.0;
    double mean_symbol_cost = 0.0;        // string quicksort only
};

struct ExperimentResult {
    std::vector<SweepPoint> points;
    std::optional<FitResult> fit;         // present when the sweep has >= 2 points
    std::vector<std::string> raw_rows;    // TallySheet CSV rows, one per trial and phase
};

/// Per trial: shuffle with seed xor trial, sort with the configured
/// instrumented algorithm, record the tally. Identical config gives
/// byte-identical rows regardless of --jobs.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct BuildPhasePoint {
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    double mean_build_red_red = 0.0;
    double ratio = 0.0;  // mean / r
};

struct BuildPhaseReport {
    std::vector<BuildPhasePoint> points;
    double max_ratio = 0.0;
};

/// Shuffled inputs only; measures binary-heap BuildHeap red/red counts over
/// a sweep of n with r = n/4 unless r_override is given.
BuildPhaseReport run_buildphase_experiment(const std::vector<std::uint64_t>& n_values,
                                           std::optional<std::uint64_t> r_override,
                                           std::uint64_t trials, std::uint64_t seed,
                                           unsigned jobs = 1);

struct RootListReport {
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::uint64_t snapshots = 0;
    double mean_observed = 0.0;    // red roots per snapshot
    double mean_formula = 0.0;     // sum_s (1 - C(n'-r', 2^s)/C(n', 2^s))
    double paired_z = 0.0;         // mean diff over its standard error
    double drift_cap = 0.0;        // 2 (ln r + 1)
    bool within_3sigma = false;
    bool within_drift = false;
};

/// Snapshots the root list before every pop that still holds red keys,
/// counting red roots against the occupancy formula at the live (n', r').
RootListReport run_rootlist_experiment(std::uint64_t n, std::uint64_t r,
                                       std::uint64_t min_snapshots, std::uint64_t seed);

struct PredictMeasureReport {
    std::size_t corpus_size = 0;
    std::uint64_t trials = 0;
    double prediction = 0.0;     // sum over trie nodes of Q(thickness)
    double mean_measured = 0.0;  // mean quicksort symbol comparisons
    double rel_error = 0.0;
};

PredictMeasureReport predict_and_measure(const std::vector<StringKey>& corpus,
                                         std::uint64_t trials, std::uint64_t seed);

/// Multiline CSV for an experiment result: raw rows then a summary block.
std::string experiment_csv(const ExperimentConfig& cfg, const ExperimentResult& res);

}  // namespace cmplab
