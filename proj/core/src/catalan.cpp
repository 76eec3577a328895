#include "qtcat/catalan.hpp"

#include <stdexcept>

#include "qtcat/util.hpp"

namespace qtcat {

namespace {

// Depth-first over Dyck vectors of order n with incremental area and dinv:
// appending entry x pairs it with every earlier entry equal to x or x + 1.
struct DyckVectorScan {
    int n;
    std::vector<long long>& cells;  // dense (area, dinv) accumulator
    std::vector<int> value_count;
    int max_area;

    void run() {
        if (n == 0) {
            cells[0] += 1;  // the empty vector: area 0, dinv 0
            return;
        }
        value_count.assign(static_cast<size_t>(n) + 2, 0);
        step(1, 0, 0, 0);
    }

    void step(int pos, int prev, int area, int dinv) {
        const int hi = pos == 1 ? 0 : prev + 1;
        for (int x = 0; x <= hi; ++x) {
            const int d2 = dinv + value_count[static_cast<size_t>(x)] +
                           value_count[static_cast<size_t>(x) + 1];
            const int a2 = area + x;
            if (pos == n) {
                cells[static_cast<size_t>(a2) * static_cast<size_t>(max_area + 1) +
                      static_cast<size_t>(d2)] += 1;
            } else {
                ++value_count[static_cast<size_t>(x)];
                step(pos + 1, x, a2, d2);
                --value_count[static_cast<size_t>(x)];
            }
        }
    }
};

}  // namespace

BivariatePoly qt_catalan(int n) {
    if (n < 0) throw std::invalid_argument("qt_catalan: n must be nonnegative");
    if (n > kQtCatalanCap)
        throw std::domain_error("qt_catalan: n exceeds the enumeration cap of " +
                                std::to_string(kQtCatalanCap));
    const int max_area = static_cast<int>(binom2(n));
    std::vector<long long> cells(static_cast<size_t>(max_area + 1) *
                                     static_cast<size_t>(max_area + 1),
                                 0);
    DyckVectorScan scan{n, cells, {}, max_area};
    scan.run();

    BivariatePoly poly;
    for (int a = 0; a <= max_area; ++a)
        for (int d = 0; d <= max_area; ++d) {
            const long long c = cells[static_cast<size_t>(a) * static_cast<size_t>(max_area + 1) +
                                      static_cast<size_t>(d)];
            if (c) poly.add_term(a, d, c);
        }
    return poly;
}

BivariatePoly qt_catalan_restricted(const std::vector<Partition>& s, int n) {
    BivariatePoly poly;
    for (const auto& p : s)
        if (mind(p) <= n) poly.add_term(area(p, n), dinv(p), 1);
    return poly;
}

bool top_symmetric_upto(const BivariatePoly& p, int floor) {
    return p.truncate_degree_at_least(floor).is_symmetric();
}

BivariatePoly restricted_from_mind_word(const StepFunction& f, int k, int n) {
    // the window must already cover every i with F(i) <= n
    for (const auto& s : f.pieces) {
        const Interval iv = threshold_set(s, n);
        if (!iv.empty() && (iv.lo < f.lo || iv.hi > f.hi))
            throw std::domain_error(
                "restricted_from_mind_word: window does not cover the threshold set of a piece");
    }
    BivariatePoly poly;
    for (long long i = f.lo; i <= f.hi; ++i) {
        if (f.value(i) > n) continue;
        const long long q_exp = binom2(n) - k - i;
        if (q_exp < 0 || i < 0)
            throw std::domain_error("restricted_from_mind_word: negative exponent");
        poly.add_term(static_cast<int>(q_exp), static_cast<int>(i), 1);
    }
    return poly;
}

}  // namespace qtcat
