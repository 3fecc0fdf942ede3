#include "cmplab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include "cmplab/binomial.hpp"
#include "cmplab/combinatorics.hpp"
#include "cmplab/heap_core.hpp"
#include "cmplab/probe.hpp"
#include "cmplab/quicksort.hpp"
#include "cmplab/rng.hpp"
#include "cmplab/run_partition.hpp"
#include "cmplab/trie.hpp"

namespace cmplab {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Classic: return "classic";
        case Algo::Floyd: return "floyd";
        case Algo::Modified: return "modified";
        case Algo::Binomial: return "binomial";
        case Algo::QuicksortStrings: return "quicksort-strings";
    }
    return "?";
}

std::optional<Algo> parse_algo(const std::string& name) {
    if (name == "classic") return Algo::Classic;
    if (name == "floyd") return Algo::Floyd;
    if (name == "modified") return Algo::Modified;
    if (name == "binomial") return Algo::Binomial;
    if (name == "quicksort-strings") return Algo::QuicksortStrings;
    return std::nullopt;
}

FitResult fit_rlogr(const std::vector<std::pair<std::uint64_t, double>>& points) {
    double s11 = 0, s12 = 0, s22 = 0, sy1 = 0, sy2 = 0;
    for (const auto& [r, y] : points) {
        const double x1 = static_cast<double>(r) * std::log2(static_cast<double>(r));
        const double x2 = static_cast<double>(r);
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        sy1 += x1 * y;
        sy2 += x2 * y;
    }
    const double det = s11 * s22 - s12 * s12;
    FitResult fit;
    if (det == 0.0) throw std::invalid_argument("fit_rlogr: singular design");
    fit.c_hat = (sy1 * s22 - sy2 * s12) / det;
    fit.b_hat = (s11 * sy2 - s12 * sy1) / det;
    double rss = 0;
    for (const auto& [r, y] : points) {
        const double x1 = static_cast<double>(r) * std::log2(static_cast<double>(r));
        const double e = y - fit.c_hat * x1 - fit.b_hat * static_cast<double>(r);
        rss += e * e;
    }
    fit.residual_norm = std::sqrt(rss);
    return fit;
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    for (const auto& [x, y] : points) {
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const unsigned workers = std::min<std::uint64_t>(jobs, count);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::uint64_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct TrialOutcome {
    TallySheet sheet;
    std::uint64_t premature_red_red = 0;
    std::uint64_t symbol_cost = 0;
    bool sorted = true;
};

// Quicksort over corpus strings with both symbol-cost accounting and a
// probe tally keyed by each string's rank in the sorted corpus.
TrialOutcome run_string_quicksort_trial(const std::vector<StringKey>& corpus,
                                        const RedRange& red, std::uint64_t trial_seed) {
    TrialOutcome out;
    Probe probe(red, out.sheet);

    std::vector<StringKey> sorted_corpus = corpus;
    std::sort(sorted_corpus.begin(), sorted_corpus.end(),
              [](const StringKey& a, const StringKey& b) {
                  return string_compare(a, b).order == std::strong_ordering::less;
              });
    std::map<std::string, std::int64_t> rank;
    for (std::size_t i = 0; i < sorted_corpus.size(); ++i) {
        rank[sorted_corpus[i].bytes] = static_cast<std::int64_t>(i);
    }

    std::vector<StringKey> keys = shuffled(corpus, trial_seed);
    detail::quicksort_first_pivot(keys, [&](const StringKey& a, const StringKey& b) {
        const auto res = string_compare(a, b);
        out.symbol_cost += res.symbol_cost;
        probe.compare(Key::real(rank[a.bytes]), Key::real(rank[b.bytes]), Phase::Sort);
        return res.order == std::strong_ordering::less;
    });
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
        if (string_compare(keys[i + 1], keys[i]).order == std::strong_ordering::less) {
            out.sorted = false;
        }
    }
    return out;
}

TrialOutcome run_rank_sort_trial(Algo algo, std::uint64_t n, const RedRange& red,
                                 std::uint64_t trial_seed) {
    TrialOutcome out;
    Probe probe(red, out.sheet);
    std::vector<Key> keys = shuffled(make_ranked_keys(n), trial_seed);

    // Latch the sort-phase red/red count the first time a red key is at the
    // root; pops before that moment are the premature segment.
    bool matured = false;
    auto latch = [&](const HeapArray& h, std::size_t) {
        if (!matured && !is_premature(h, red)) {
            matured = true;
            out.premature_red_red = out.sheet.count(Phase::Sort, ColorClass::RedRed);
        }
    };

    std::vector<Key> result;
    switch (algo) {
        case Algo::Classic: result = heapsort_classic(std::move(keys), probe, latch); break;
        case Algo::Floyd: result = heapsort_floyd(std::move(keys), probe, latch); break;
        case Algo::Modified: result = heapsort_modified(std::move(keys), probe); break;
        case Algo::Binomial: result = binomial_heapsort(std::move(keys), probe); break;
        case Algo::QuicksortStrings:
            throw std::invalid_argument("run_rank_sort_trial: string algo needs a corpus");
    }
    if (!matured) out.premature_red_red = out.sheet.count(Phase::Sort, ColorClass::RedRed);
    for (std::size_t i = 0; i < result.size(); ++i) {
        if (result[i].rank != static_cast<std::int64_t>(i)) out.sorted = false;
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult res;
    std::vector<std::pair<std::uint64_t, double>> fit_points;

    for (const std::uint64_t r : cfg.r_values) {
        const std::uint64_t n =
            cfg.algo == Algo::QuicksortStrings ? cfg.corpus.size() : cfg.n;
        if (r > n) throw std::invalid_argument("run_experiment: r exceeds n");
        const std::int64_t lo = cfg.lo.value_or(static_cast<std::int64_t>(n - r));
        const RedRange red{lo, static_cast<std::int64_t>(r)};

        std::vector<TrialOutcome> outcomes(cfg.trials);
        parallel_for(cfg.trials, cfg.jobs, [&](std::uint64_t t) {
            const std::uint64_t trial_seed = cfg.seed ^ t;
            outcomes[t] = cfg.algo == Algo::QuicksortStrings
                              ? run_string_quicksort_trial(cfg.corpus, red, trial_seed)
                              : run_rank_sort_trial(cfg.algo, n, red, trial_seed);
        });

        SweepPoint pt;
        pt.r = r;
        const RunContext ctx_base{cfg.seed, n, r, lo, algo_name(cfg.algo)};
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            const TrialOutcome& o = outcomes[t];
            if (!o.sorted) throw std::logic_error("run_experiment: sorter produced bad output");
            pt.mean_red_red += static_cast<double>(o.sheet.color_total(ColorClass::RedRed));
            pt.mean_red_red_build +=
                static_cast<double>(o.sheet.count(Phase::Build, ColorClass::RedRed));
            pt.mean_red_red_sort +=
                static_cast<double>(o.sheet.count(Phase::Sort, ColorClass::RedRed));
            pt.mean_red_red_merge +=
                static_cast<double>(o.sheet.count(Phase::Merge, ColorClass::RedRed) +
                                    o.sheet.count(Phase::FindMax, ColorClass::RedRed) +
                                    o.sheet.count(Phase::PopMerge, ColorClass::RedRed));
            pt.mean_dummy += static_cast<double>(o.sheet.color_total(ColorClass::DummyInvolved));
            pt.mean_total += static_cast<double>(o.sheet.total());
            pt.mean_premature_red_red += static_cast<double>(o.premature_red_red);
            pt.mean_symbol_cost += static_cast<double>(o.symbol_cost);

            RunContext ctx = ctx_base;
            ctx.seed = cfg.seed ^ t;
            for (std::size_t p = 0; p < kPhaseCount; ++p) {
                const Phase ph = static_cast<Phase>(p);
                res.raw_rows.push_back(tally_csv_row(ctx, o.sheet, &ph));
            }
            res.raw_rows.push_back(tally_csv_row(ctx, o.sheet, nullptr));
        }
        const double inv = 1.0 / static_cast<double>(cfg.trials);
        pt.mean_red_red *= inv;
        pt.mean_red_red_build *= inv;
        pt.mean_red_red_sort *= inv;
        pt.mean_red_red_merge *= inv;
        pt.mean_dummy *= inv;
        pt.mean_total *= inv;
        pt.mean_premature_red_red *= inv;
        pt.mean_mature_red_red = pt.mean_red_red_sort - pt.mean_premature_red_red;
        pt.mean_symbol_cost *= inv;
        res.points.push_back(pt);
        fit_points.emplace_back(r, pt.mean_red_red);
    }

    if (fit_points.size() >= 2) res.fit = fit_rlogr(fit_points);
    return res;
}

BuildPhaseReport run_buildphase_experiment(const std::vector<std::uint64_t>& n_values,
                                           std::optional<std::uint64_t> r_override,
                                           std::uint64_t trials, std::uint64_t seed,
                                           unsigned jobs) {
    BuildPhaseReport rep;
    for (const std::uint64_t n : n_values) {
        const std::uint64_t r = r_override.value_or(std::max<std::uint64_t>(1, n / 4));
        const RedRange red{static_cast<std::int64_t>(n - r), static_cast<std::int64_t>(r)};
        std::vector<std::uint64_t> counts(trials, 0);
        parallel_for(trials, jobs, [&](std::uint64_t t) {
            TallySheet sheet;
            Probe probe(red, sheet);
            HeapArray heap(shuffled(make_ranked_keys(n), seed ^ t));
            build_heap(heap, probe);
            counts[t] = sheet.count(Phase::Build, ColorClass::RedRed);
        });
        double mean = 0;
        for (auto c : counts) mean += static_cast<double>(c);
        mean /= static_cast<double>(trials);
        BuildPhasePoint pt{n, r, mean, mean / static_cast<double>(r)};
        rep.max_ratio = std::max(rep.max_ratio, pt.ratio);
        rep.points.push_back(pt);
    }
    return rep;
}

namespace {

// Expected number of red roots for a queue of n' keys of which the top r'
// are red: sum over the binary expansion of n' of 1 - C(n'-r', 2^s)/C(n', 2^s).
double red_root_formula(std::uint64_t n, std::uint64_t r) {
    using combinatorics::binomial;
    double sum = 0.0;
    for (unsigned s = 0; s < 64; ++s) {
        const std::uint64_t sz = std::uint64_t(1) << s;
        if ((n & sz) == 0) continue;
        mpq_class frac(binomial(n - r, static_cast<std::int64_t>(sz)),
                       binomial(n, static_cast<std::int64_t>(sz)));
        frac.canonicalize();
        sum += 1.0 - frac.get_d();
    }
    return sum;
}

}  // namespace

RootListReport run_rootlist_experiment(std::uint64_t n, std::uint64_t r,
                                       std::uint64_t min_snapshots, std::uint64_t seed) {
    if (r == 0 || r > n) throw std::invalid_argument("run_rootlist_experiment: need 0 < r <= n");
    RootListReport rep;
    rep.n = n;
    rep.r = r;
    const RedRange red{static_cast<std::int64_t>(n - r), static_cast<std::int64_t>(r)};

    std::map<std::pair<std::uint64_t, std::uint64_t>, double> formula_cache;
    auto formula = [&](std::uint64_t nn, std::uint64_t rr) {
        const auto key = std::make_pair(nn, rr);
        auto it = formula_cache.find(key);
        if (it != formula_cache.end()) return it->second;
        const double v = red_root_formula(nn, rr);
        formula_cache.emplace(key, v);
        return v;
    };

    double sum_d = 0.0, sum_d2 = 0.0, sum_obs = 0.0, sum_form = 0.0;
    std::uint64_t count = 0;
    std::uint64_t trial = 0;
    while (count < min_snapshots) {
        TallySheet sheet;
        Probe probe(red, sheet);
        std::vector<Key> keys = shuffled(make_ranked_keys(n), seed ^ trial);
        binomial_heapsort(std::move(keys), probe,
                          [&](const RootList& q, std::size_t pops) {
                              if (pops >= r) return;  // no reds left
                              std::uint64_t observed = 0;
                              for (const auto& t : q.trees()) {
                                  if (red.contains(t.root)) ++observed;
                              }
                              const double f = formula(n - pops, r - pops);
                              const double d = static_cast<double>(observed) - f;
                              sum_d += d;
                              sum_d2 += d * d;
                              sum_obs += static_cast<double>(observed);
                              sum_form += f;
                              ++count;
                          });
        ++trial;
    }

    rep.snapshots = count;
    rep.mean_observed = sum_obs / static_cast<double>(count);
    rep.mean_formula = sum_form / static_cast<double>(count);
    const double mean_d = sum_d / static_cast<double>(count);
    const double var_d =
        std::max(0.0, sum_d2 / static_cast<double>(count) - mean_d * mean_d);
    const double se = std::sqrt(var_d / static_cast<double>(count));
    rep.paired_z = se > 0 ? mean_d / se : 0.0;
    rep.drift_cap = combinatorics::drift_bound(r);
    rep.within_3sigma = std::abs(rep.paired_z) <= 3.0;
    rep.within_drift = rep.mean_observed <= rep.drift_cap;
    return rep;
}

PredictMeasureReport predict_and_measure(const std::vector<StringKey>& corpus,
                                         std::uint64_t trials, std::uint64_t seed) {
    PredictMeasureReport rep;
    rep.corpus_size = corpus.size();
    rep.trials = trials;

    const PrefixTrie trie = PrefixTrie::build(corpus);
    rep.prediction = trie.predict_cost(
        [](std::uint64_t t) { return combinatorics::quicksort_expected_comparisons(t); });

    double total = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        QuicksortStats stats;
        instrumented_quicksort(corpus, seed ^ t, stats);
        total += static_cast<double>(stats.symbol_comparisons);
    }
    rep.mean_measured = trials ? total / static_cast<double>(trials) : 0.0;
    rep.rel_error = rep.prediction != 0.0
                        ? std::abs(rep.mean_measured - rep.prediction) / rep.prediction
                        : std::abs(rep.mean_measured);
    return rep;
}

std::string experiment_csv(const ExperimentConfig& cfg, const ExperimentResult& res) {
    std::string out = tally_csv_header() + "\n";
    for (const auto& row : res.raw_rows) out += row + "\n";
    out += "# summary\n";
    out += "r,mean_red_red,mean_build_rr,mean_sort_rr,mean_merge_rr,mean_dummy,mean_total,"
           "mean_premature_rr,mean_mature_rr,mean_symbol_cost\n";
    char buf[512];
    for (const auto& p : res.points) {
        std::snprintf(buf, sizeof(buf), "%llu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f",
                      static_cast<unsigned long long>(p.r), p.mean_red_red, p.mean_red_red_build,
                      p.mean_red_red_sort, p.mean_red_red_merge, p.mean_dummy, p.mean_total,
                      p.mean_premature_red_red, p.mean_mature_red_red, p.mean_symbol_cost);
        out += std::string(buf) + "\n";
    }
    if (res.fit) {
        std::snprintf(buf, sizeof(buf), "# fit,c_hat=%.6f,b_hat=%.6f,residual=%.6f",
                      res.fit->c_hat, res.fit->b_hat, res.fit->residual_norm);
        out += std::string(buf) + "\n";
    }
    (void)cfg;
    return out;
}

}  // namespace cmplab
