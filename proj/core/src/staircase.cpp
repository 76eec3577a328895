#include "qtcat/staircase.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qtcat/util.hpp"

namespace qtcat {

namespace {

// Least n with binom(n, 2) >= d, for d >= 0.
long long binom2_ceil_inverse(long long d) {
    if (d <= 0) return 0;
    long long n = static_cast<long long>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(d))) / 2.0);
    while (binom2(n) >= d) --n;
    while (binom2(n) < d) ++n;
    return n;
}

}  // namespace

int staircase_value(const Staircase& s, long long i) {
    if (!s.in_domain(i))
        throw std::domain_error("staircase_value: index outside domain");
    if (i <= s.a + s.m) return s.h;
    // find the least n > h with i <= a + m + binom(n,2) - binom(h,2)
    const long long d = i - s.a - s.m + binom2(s.h);
    long long n = binom2_ceil_inverse(d);
    if (n < s.h + 1) n = s.h + 1;
    assert(binom2(n) >= d && (n == s.h + 1 || binom2(n - 1) < d));
    return static_cast<int>(n);
}

Interval threshold_set(const Staircase& s, int n) {
    if (n < s.h) return Interval{};
    Interval iv{s.a, s.a + s.m + binom2(n) - binom2(s.h)};
    if (s.end && iv.hi > *s.end) iv.hi = *s.end;
    return iv;
}

int StepFunction::value(long long i) const {
    if (!in_window(i)) throw std::domain_error("StepFunction::value: outside window");
    return values[static_cast<size_t>(i - lo)];
}

std::optional<int> min_staircase_value(const std::vector<Staircase>& fs, long long i) {
    std::optional<int> best;
    for (const auto& s : fs)
        if (s.in_domain(i)) {
            const int v = staircase_value(s, i);
            if (!best || v < *best) best = v;
        }
    return best;
}

StepFunction pointwise_min(const std::vector<Staircase>& fs, long long window_lo,
                           long long window_hi) {
    StepFunction f;
    f.lo = window_lo;
    f.hi = window_hi;
    f.pieces = fs;
    for (long long i = window_lo; i <= window_hi; ++i) {
        const auto v = min_staircase_value(fs, i);
        if (!v)
            throw std::domain_error("pointwise_min: window point " + std::to_string(i) +
                                    " lies in no staircase domain");
        f.values.push_back(*v);
    }
    return f;
}

OppositeCheckResult opposite_check(const std::vector<StaircaseTriple>& f_params,
                                   const std::vector<StaircaseTriple>& g_params, int k,
                                   long long window_lo, long long window_hi, int n_max) {
    if (f_params.size() != g_params.size())
        throw std::invalid_argument("opposite_check: parameter lists differ in length");
    if (f_params.empty())
        throw std::invalid_argument("opposite_check: empty parameter lists");
    for (const auto* list : {&f_params, &g_params})
        for (const auto& t : *list)
            if (t.a < 0 || t.m < 0 || t.h < 0)
                throw std::invalid_argument("opposite_check: parameters must be nonnegative");
    if (k < 0) throw std::invalid_argument("opposite_check: k must be nonnegative");

    OppositeCheckResult res;

    // hypothesis: pairing F_j with G_{N-j} matches m and h, and
    // a_j + b_j + m_j + k = binom(h_j, 2)
    res.hypothesis_ok = true;
    const size_t s = f_params.size();
    for (size_t j = 0; j < s && res.hypothesis_ok; ++j) {
        const auto& fj = f_params[j];
        const auto& gj = g_params[s - 1 - j];
        if (fj.m != gj.m || fj.h != gj.h) {
            res.hypothesis_ok = false;
            res.hypothesis_witness = "pair " + std::to_string(j) + ": (m,h) mismatch";
        } else if (fj.a + gj.a + fj.m + k != binom2(fj.h)) {
            res.hypothesis_ok = false;
            res.hypothesis_witness =
                "pair " + std::to_string(j) + ": " + std::to_string(fj.a) + "+" +
                std::to_string(gj.a) + "+" + std::to_string(fj.m) + "+" + std::to_string(k) +
                " != binom(" + std::to_string(fj.h) + ",2)";
        }
    }

    std::vector<Staircase> fs, gs;
    for (const auto& t : f_params) fs.push_back({t.a, t.m, t.h, std::nullopt});
    for (const auto& t : g_params) gs.push_back({t.a, t.m, t.h, std::nullopt});

    res.brute_ok = true;
    for (int n = 0; n <= n_max && res.brute_ok; ++n) {
        for (long long i = window_lo; i <= window_hi; ++i) {
            const auto fv = min_staircase_value(fs, i);
            const bool lhs = fv && *fv <= n;
            const long long gi = binom2(n) - k - i;
            const auto gv = min_staircase_value(gs, gi);
            const bool rhs = gv && *gv <= n;
            if (lhs != rhs) {
                res.brute_ok = false;
                res.brute_witness = "n=" + std::to_string(n) + " i=" + std::to_string(i);
                break;
            }
        }
    }
    return res;
}

}  // namespace qtcat
