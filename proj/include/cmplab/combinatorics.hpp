#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cmplab::combinatorics {

/// Exact binomial coefficient; zero outside 0 <= k <= n.
mpz_class binomial(std::uint64_t n, std::int64_t k);

/// Number of valid binary heaps on m distinct keys:
/// H_0 = H_1 = 1, H_m = C(m-1, k) H_k H_{m-1-k} with k the left-subtree
/// size of the m-node complete tree.
mpz_class heap_count(std::uint64_t m);

/// Left-subtree size of an m-node complete binary tree.
std::uint64_t heap_left_subtree_size(std::uint64_t m);

enum class QueueCountConvention {
    /// B_0 = B_1 = B_2 = 1; B_{2^m} = C(2^m, 2^{m-1}) B_{2^{m-1}}^2 for
    /// 2^m >= 4; otherwise B_n = C(n, 2^k) B_{2^k} B_{n-2^k} with 2^k the
    /// largest power of two below n. Counts ordered join pairs; satisfies
    /// the ratio law B_n/B_{n-1} = n (odd n) and n/2 (even n).
    OrderedJoin,
    /// Heap-ordered labelings of the binomial forest: n! divided by the
    /// product of subtree sizes over all nodes (hook-length form).
    DistinctStructure,
};

mpz_class binomial_queue_count(std::uint64_t n, QueueCountConvention convention);

/// Split probability in a heap of size 2m+1 containing all r red keys:
/// P = C(2m+1-r, m-r') C(r, r') / C(2m+1, m). Out-of-range parameters give
/// zero.
mpq_class split_probability_P(std::uint64_t m, std::uint64_t r, std::uint64_t r_prime);

/// Reference split law T = C(r, r') / 2^r.
mpq_class split_probability_T(std::uint64_t r, std::uint64_t r_prime);

/// Alternate-model split law p^N_k = C(N-1, k) / 2^{N-1} for 0 <= k <= N-1.
mpq_class alt_model_split(std::uint64_t N, std::uint64_t k);

/// The paper-analyzed upper-bound recurrence evaluated as equality:
/// C_0 = C_1 = C_2 = 0, C_N = 1 + sum_{k=0}^{N-2} C(N-2,k) C_{k+1} / 2^{N-2}.
std::vector<mpq_class> c_recurrence_table(std::uint64_t n_max);
mpq_class c_recurrence(std::uint64_t N);

/// H_k = sum_{j>=0} (1 - (1 - 1/2^j)^k), truncated once the geometric tail
/// bound k/2^{J-1} drops below 1e-12.
double h_coefficient(std::uint64_t k);

/// Residual extrema of h_coefficient(k) - log2(k) over 1 <= k <= k_max.
struct ResidualRange {
    double lo;
    double hi;
};
ResidualRange h_coefficient_residual_range(std::uint64_t k_max);

enum class GSumRange {
    FullWithRearrangement,  // k in [0, N]; self-referential terms moved left
    Inner,                  // k in [1, N-1]
};

/// Exact recurrence table for G: G(0) = G(1) = G(2) = 0 and
/// G(N) = N + sum_k C(N,k) (G(k) + G(N-k)) / 2^N under the chosen sum
/// range.
std::vector<mpq_class> g_recurrence_table(std::uint64_t n_max, GSumRange range);

/// Closed form G(N) = N sum_{j>=0} (1 - (1 - 1/2^j)^{N-1}).
double g_closed_form(std::uint64_t N);
std::vector<double> g_closed_form_table(std::uint64_t n_max);

struct ConcavityReport {
    bool holds = false;
    std::uint64_t first_failure = 0;  // meaningful when !holds
    double min_margin = 0.0;          // min over N of d2 - (1-2/e)/(N+1)
    std::uint64_t min_margin_at = 0;
};

/// Checks G(N+2) - 2G(N+1) + G(N) > (1 - 2/e)/(N+1) for 2 <= N <= n_max on
/// the closed form.
ConcavityReport g_concavity_check(std::uint64_t n_max);

struct SumBoundReport {
    bool holds = false;
    std::uint64_t first_failure = 0;
    double min_margin = 0.0;  // min over r of rhs - lhs
    std::uint64_t min_margin_at = 0;
};

/// Checks sum_{r > r' > 0} r' log2(r') < (r-1)^2/2 log2(r) - (r-1)^2/16 for
/// 16 <= r <= r_max.
SumBoundReport appendix_sum_bound_check(std::uint64_t r_max);

/// Multiplicative drift bound with delta = 1/2: 2 (ln r + 1).
double drift_bound(std::uint64_t r);

struct ScanLengthResult {
    mpq_class expected_scan;   // sum_i i p_i prod_{j<i} (1 - p_j)
    mpq_class weighted_index;  // sum_i i p_i
    bool decay_admissible;     // p_i >= 2 p_{i+1} for all i
};

/// Evaluates the root-scan expectation exactly for a probability vector
/// p_1..p_k (1-based positions). Throws unless p is a distribution.
ScanLengthResult scan_length_bound(const std::vector<mpq_class>& p);

/// Q(n) = 2(n+1) H_n - 4n, the expected Quicksort key comparisons.
double quicksort_expected_comparisons(std::uint64_t n);

/// R(n) = n log2 n.
double mergesort_comparisons(std::uint64_t n);

/// A named table of exact values rendered as integer/fraction strings, the
/// unit emitted by the CLI `table` subcommand.
struct RecurrenceTable {
    std::string name;
    std::vector<std::string> index;
    std::vector<std::string> value;
};

RecurrenceTable make_table(const std::string& name, std::uint64_t n_max);

}  // namespace cmplab::combinatorics
