#include "cmplab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cmplab::combinatorics {

mpz_class binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

std::uint64_t heap_left_subtree_size(std::uint64_t m) {
    if (m <= 1) return 0;
    std::uint64_t h = 63 - static_cast<std::uint64_t>(__builtin_clzll(m));  // floor(log2 m)
    const std::uint64_t last = m - ((std::uint64_t(1) << h) - 1);
    const std::uint64_t half = std::uint64_t(1) << (h - 1);
    return half - 1 + std::min(last, half);
}

namespace {

mpz_class heap_count_locked(std::uint64_t m, std::map<std::uint64_t, mpz_class>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const std::uint64_t k = heap_left_subtree_size(m);
    mpz_class v = binomial(m - 1, static_cast<std::int64_t>(k)) *
                  heap_count_locked(k, cache) * heap_count_locked(m - 1 - k, cache);
    cache.emplace(m, v);
    return v;
}

}  // namespace

mpz_class heap_count(std::uint64_t m) {
    static std::mutex mu;
    static std::map<std::uint64_t, mpz_class> cache{{0, 1}, {1, 1}};
    std::lock_guard<std::mutex> lock(mu);
    return heap_count_locked(m, cache);
}

namespace {

// Product of subtree sizes over one binomial tree of order k.
mpz_class subtree_size_product(unsigned k, std::map<unsigned, mpz_class>& cache) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    mpz_class v = mpz_class(1) << k;  // 2^k, the root's subtree
    for (unsigned i = 0; i < k; ++i) v *= subtree_size_product(i, cache);
    cache.emplace(k, v);
    return v;
}

mpz_class factorial(std::uint64_t n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class ordered_join_locked(std::uint64_t n, std::map<std::uint64_t, mpz_class>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const std::uint64_t k = std::uint64_t(1) << (63 - __builtin_clzll(n));
    mpz_class v;
    if (k == n) {
        v = binomial(n, static_cast<std::int64_t>(n / 2)) * ordered_join_locked(n / 2, cache) *
            ordered_join_locked(n / 2, cache);
    } else {
        v = binomial(n, static_cast<std::int64_t>(k)) * ordered_join_locked(k, cache) *
            ordered_join_locked(n - k, cache);
    }
    cache.emplace(n, v);
    return v;
}

mpz_class ordered_join_count(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, mpz_class> cache{{0, 1}, {1, 1}, {2, 1}};
    std::lock_guard<std::mutex> lock(mu);
    return ordered_join_locked(n, cache);
}

}  // namespace

mpz_class binomial_queue_count(std::uint64_t n, QueueCountConvention convention) {
    if (convention == QueueCountConvention::OrderedJoin) return ordered_join_count(n);
    static std::mutex mu;
    static std::map<unsigned, mpz_class> cache{{0, 1}};
    std::lock_guard<std::mutex> lock(mu);
    mpz_class den = 1;
    std::uint64_t rest = n;
    unsigned bit = 0;
    while (rest) {
        if (rest & 1) den *= subtree_size_product(bit, cache);
        rest >>= 1;
        ++bit;
    }
    return factorial(n) / den;
}

mpq_class split_probability_P(std::uint64_t m, std::uint64_t r, std::uint64_t r_prime) {
    if (r > 2 * m + 1 || r_prime > r) return 0;
    const mpz_class num = binomial(2 * m + 1 - r, static_cast<std::int64_t>(m) -
                                                      static_cast<std::int64_t>(r_prime)) *
                          binomial(r, static_cast<std::int64_t>(r_prime));
    mpq_class q(num, binomial(2 * m + 1, static_cast<std::int64_t>(m)));
    q.canonicalize();
    return q;
}

mpq_class split_probability_T(std::uint64_t r, std::uint64_t r_prime) {
    if (r_prime > r) return 0;
    mpq_class q(binomial(r, static_cast<std::int64_t>(r_prime)), mpz_class(1) << r);
    q.canonicalize();
    return q;
}

mpq_class alt_model_split(std::uint64_t N, std::uint64_t k) {
    if (N == 0 || k > N - 1) throw std::out_of_range("alt_model_split: need 0 <= k <= N-1");
    mpq_class q(binomial(N - 1, static_cast<std::int64_t>(k)), mpz_class(1) << (N - 1));
    q.canonicalize();
    return q;
}

std::vector<mpq_class> c_recurrence_table(std::uint64_t n_max) {
    std::vector<mpq_class> c(n_max + 1, mpq_class(0));
    for (std::uint64_t N = 3; N <= n_max; ++N) {
        mpq_class sum = 0;
        for (std::uint64_t k = 0; k + 2 <= N; ++k) {
            sum += mpq_class(binomial(N - 2, static_cast<std::int64_t>(k))) * c[k + 1];
        }
        c[N] = 1 + sum / mpq_class(mpz_class(1) << (N - 2));
        c[N].canonicalize();
    }
    return c;
}

mpq_class c_recurrence(std::uint64_t N) { return c_recurrence_table(N)[N]; }

double h_coefficient(std::uint64_t k) {
    if (k == 0) return 0.0;
    // Tail over j >= J is below sum k/2^j = k/2^{J-1}; stop at 1e-12.
    double sum = 0.0;
    double tail = static_cast<double>(k);
    for (unsigned j = 0; tail >= 1e-12 || j < 2; ++j) {
        const double q = 1.0 - std::ldexp(1.0, -static_cast<int>(j));
        sum += 1.0 - std::pow(q, static_cast<double>(k));
        tail /= 2.0;
    }
    return sum;
}

ResidualRange h_coefficient_residual_range(std::uint64_t k_max) {
    // Incremental powers: q_j^k updated by one multiply per k per j.
    constexpr unsigned kJ = 62;
    double q[kJ];
    double pw[kJ];
    for (unsigned j = 0; j < kJ; ++j) {
        q[j] = 1.0 - std::ldexp(1.0, -static_cast<int>(j));
        pw[j] = 1.0;
    }
    ResidualRange range{1e300, -1e300};
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        double h = 0.0;
        for (unsigned j = 0; j < kJ; ++j) {
            pw[j] *= q[j];
            h += 1.0 - pw[j];
        }
        const double res = h - std::log2(static_cast<double>(k));
        range.lo = std::min(range.lo, res);
        range.hi = std::max(range.hi, res);
    }
    return range;
}

std::vector<mpq_class> g_recurrence_table(std::uint64_t n_max, GSumRange range) {
    std::vector<mpq_class> g(n_max + 1, mpq_class(0));
    for (std::uint64_t N = 3; N <= n_max; ++N) {
        mpq_class sum = 0;
        for (std::uint64_t k = 1; k < N; ++k) {
            sum += mpq_class(binomial(N, static_cast<std::int64_t>(k))) * (g[k] + g[N - k]);
        }
        const mpq_class pow2(mpz_class(1) << N);
        mpq_class v = N + sum / pow2;
        if (range == GSumRange::FullWithRearrangement) {
            // The k = 0 and k = N terms contribute 2 G(N)/2^N; move them to
            // the left-hand side.
            v = v / (1 - mpq_class(2) / pow2);
        }
        v.canonicalize();
        g[N] = v;
    }
    return g;
}

double g_closed_form(std::uint64_t N) {
    if (N <= 1) return 0.0;
    double sum = 0.0;
    double tail = static_cast<double>(N - 1);
    for (unsigned j = 0; tail >= 1e-12 || j < 2; ++j) {
        const double q = 1.0 - std::ldexp(1.0, -static_cast<int>(j));
        sum += 1.0 - std::pow(q, static_cast<double>(N - 1));
        tail /= 2.0;
    }
    return static_cast<double>(N) * sum;
}

std::vector<double> g_closed_form_table(std::uint64_t n_max) {
    constexpr unsigned kJ = 62;
    double q[kJ];
    double pw[kJ];  // q_j^{N-1}, updated incrementally
    for (unsigned j = 0; j < kJ; ++j) {
        q[j] = 1.0 - std::ldexp(1.0, -static_cast<int>(j));
        pw[j] = 1.0;  // N = 1: exponent 0
    }
    std::vector<double> g(n_max + 1, 0.0);
    for (std::uint64_t N = 2; N <= n_max; ++N) {
        double sum = 0.0;
        for (unsigned j = 0; j < kJ; ++j) {
            pw[j] *= q[j];
            sum += 1.0 - pw[j];
        }
        g[N] = static_cast<double>(N) * sum;
    }
    return g;
}

ConcavityReport g_concavity_check(std::uint64_t n_max) {
    const std::vector<double> g = g_closed_form_table(n_max + 2);
    ConcavityReport rep;
    rep.holds = true;
    rep.min_margin = 1e300;
    for (std::uint64_t N = 2; N <= n_max; ++N) {
        const double d2 = g[N + 2] - 2 * g[N + 1] + g[N];
        const double bound = (1.0 - 2.0 / std::exp(1.0)) / static_cast<double>(N + 1);
        const double margin = d2 - bound;
        if (margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.min_margin_at = N;
        }
        if (!(d2 > bound) && rep.holds) {
            rep.holds = false;
            rep.first_failure = N;
        }
    }
    return rep;
}

SumBoundReport appendix_sum_bound_check(std::uint64_t r_max) {
    SumBoundReport rep;
    rep.holds = true;
    rep.min_margin = 1e300;
    long double lhs = 0.0L;  // sum_{r' < r} r' log2 r'
    for (std::uint64_t r = 2; r <= r_max; ++r) {
        const long double rp = static_cast<long double>(r - 1);
        lhs += rp * std::log2(rp);
        if (r < 16) continue;
        const long double rm1 = static_cast<long double>(r - 1);
        const long double rhs =
            rm1 * rm1 / 2.0L * std::log2(static_cast<long double>(r)) - rm1 * rm1 / 16.0L;
        const double margin = static_cast<double>(rhs - lhs);
        if (margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.min_margin_at = r;
        }
        if (!(lhs < rhs) && rep.holds) {
            rep.holds = false;
            rep.first_failure = r;
        }
    }
    return rep;
}

double drift_bound(std::uint64_t r) {
    return 2.0 * (std::log(static_cast<double>(r)) + 1.0);
}

ScanLengthResult scan_length_bound(const std::vector<mpq_class>& p) {
    mpq_class total = 0;
    for (const auto& pi : p) {
        if (pi < 0) throw std::invalid_argument("scan_length_bound: negative probability");
        total += pi;
    }
    if (total != 1) throw std::invalid_argument("scan_length_bound: probabilities must sum to 1");

    ScanLengthResult res;
    res.expected_scan = 0;
    res.weighted_index = 0;
    res.decay_admissible = true;
    mpq_class survive = 1;  // prod_{j<i} (1 - p_j)
    for (std::size_t i = 0; i < p.size(); ++i) {
        const mpq_class idx(static_cast<unsigned long>(i + 1));
        res.expected_scan += idx * p[i] * survive;
        res.weighted_index += idx * p[i];
        survive *= (1 - p[i]);
        if (i + 1 < p.size() && p[i] < 2 * p[i + 1]) res.decay_admissible = false;
    }
    res.expected_scan.canonicalize();
    res.weighted_index.canonicalize();
    return res;
}

double quicksort_expected_comparisons(std::uint64_t n) {
    double h = 0.0;
    for (std::uint64_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
    return 2.0 * static_cast<double>(n + 1) * h - 4.0 * static_cast<double>(n);
}

double mergesort_comparisons(std::uint64_t n) {
    if (n == 0) return 0.0;
    return static_cast<double>(n) * std::log2(static_cast<double>(n));
}

namespace {

std::string q_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

RecurrenceTable make_table(const std::string& name, std::uint64_t n_max) {
    RecurrenceTable t;
    t.name = name;
    auto push = [&t](std::uint64_t i, const std::string& v) {
        t.index.push_back(std::to_string(i));
        t.value.push_back(v);
    };
    if (name == "heap-count") {
        for (std::uint64_t i = 0; i <= n_max; ++i) push(i, heap_count(i).get_str());
    } else if (name == "queue-count-ordered") {
        for (std::uint64_t i = 0; i <= n_max; ++i) {
            push(i, binomial_queue_count(i, QueueCountConvention::OrderedJoin).get_str());
        }
    } else if (name == "queue-count-distinct") {
        for (std::uint64_t i = 0; i <= n_max; ++i) {
            push(i, binomial_queue_count(i, QueueCountConvention::DistinctStructure).get_str());
        }
    } else if (name == "c-recurrence") {
        const auto c = c_recurrence_table(n_max);
        for (std::uint64_t i = 0; i <= n_max; ++i) push(i, q_to_string(c[i]));
    } else if (name == "g-recurrence-full") {
        const auto g = g_recurrence_table(n_max, GSumRange::FullWithRearrangement);
        for (std::uint64_t i = 0; i <= n_max; ++i) push(i, q_to_string(g[i]));
    } else if (name == "g-recurrence-inner") {
        const auto g = g_recurrence_table(n_max, GSumRange::Inner);
        for (std::uint64_t i = 0; i <= n_max; ++i) push(i, q_to_string(g[i]));
    } else if (name == "g-closed") {
        const auto g = g_closed_form_table(n_max);
        char buf[64];
        for (std::uint64_t i = 0; i <= n_max; ++i) {
            std::snprintf(buf, sizeof(buf), "%.6f", g[i]);
            push(i, buf);
        }
    } else if (name == "h-coefficients") {
        char buf[64];
        for (std::uint64_t i = 0; i <= n_max; ++i) {
            std::snprintf(buf, sizeof(buf), "%.6f", h_coefficient(i));
            push(i, buf);
        }
    } else {
        throw std::invalid_argument("unknown table: " + name);
    }
    return t;
}

}  // namespace cmplab::combinatorics
