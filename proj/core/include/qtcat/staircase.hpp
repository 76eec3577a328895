#ifndef QTCAT_STAIRCASE_HPP
#define QTCAT_STAIRCASE_HPP

#include <optional>
#include <string>
#include <vector>

namespace qtcat {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
    long long lo = 0;
    long long hi = -1;
    bool empty() const { return lo > hi; }
    bool contains(long long x) const { return lo <= x && x <= hi; }
};

/// The (a, m, h)-staircase: domain {a, a+1, ...}, values m+1 copies of h,
/// then h copies of h+1, then h+1 copies of h+2, and so on. An optional
/// right endpoint restricts to the finite prefix {a, ..., end}.
struct Staircase {
    long long a = 0;
    int m = 0;
    int h = 0;
    std::optional<long long> end;

    bool in_domain(long long i) const { return i >= a && (!end || i <= *end); }
};

/// F(i) for i in the domain. Closed form via the bracketing
///   F(i) = n  iff  a + m + binom(n-1,2) - binom(h,2) < i <= a + m + binom(n,2) - binom(h,2)
/// for n > h, and F(i) = h on the plateau [a, a+m].
int staircase_value(const Staircase& s, long long i);

/// { i in dom : F(i) <= n } = [a, a + m + binom(n,2) - binom(h,2)] for
/// n >= h, empty for n < h; clipped to [a, end] for finite staircases.
Interval threshold_set(const Staircase& s, int n);

/// A step function over an explicit window, with the staircases it was
/// built from when it arose as a pointwise minimum.
struct StepFunction {
    long long lo = 0;
    long long hi = -1;
    std::vector<int> values;  // values[i - lo]
    std::vector<Staircase> pieces;

    bool in_window(long long i) const { return i >= lo && i <= hi; }
    int value(long long i) const;
};

/// Pointwise minimum of the given staircases over the window. Every window
/// point must lie in at least one staircase domain.
StepFunction pointwise_min(const std::vector<Staircase>& fs, long long window_lo,
                           long long window_hi);

/// Evaluates min_j F_j(i) over the staircases whose domain contains i;
/// nullopt when none does.
std::optional<int> min_staircase_value(const std::vector<Staircase>& fs, long long i);

struct StaircaseTriple {
    long long a = 0;
    int m = 0;
    int h = 0;
};

/// Verdicts of the opposite-property check for two staircase families.
struct OppositeCheckResult {
    bool hypothesis_ok = false;      // a_j + b_j + m_j + k = binom(h_j, 2) with
                                     // G reversed against F (m, h matching)
    std::string hypothesis_witness;  // first violation when !hypothesis_ok
    bool brute_ok = false;           // F(i) <= n  iff  G(binom(n,2)-k-i) <= n
    std::string brute_witness;       // first (n, i) counterexample
};

/// Checks both sides of the opposite property for deficit k between
/// F = min of f_params staircases and G = min of g_params staircases,
/// pairing f_params[j] with g_params[count-1-j]. The brute force runs over
/// all 0 <= n <= n_max and window_lo <= i <= window_hi, evaluating both
/// minima exactly (out-of-domain counts as "greater than n").
/// All parameters must be nonnegative and the lists of equal length.
OppositeCheckResult opposite_check(const std::vector<StaircaseTriple>& f_params,
                                   const std::vector<StaircaseTriple>& g_params, int k,
                                   long long window_lo, long long window_hi, int n_max);

}  // namespace qtcat

#endif
