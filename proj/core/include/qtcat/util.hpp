#ifndef QTCAT_UTIL_HPP
#define QTCAT_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qtcat {

// Exact integer helpers. All counts in this library must stay exact;
// overflow throws instead of wrapping.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// binom(n, 2) = n(n-1)/2 for n >= 0 (0 for n < 2).
inline long long binom2(long long n) {
    if (n < 2) return 0;
    return checked_mul(n, n - 1) / 2;
}

/// Catalan numbers C_0..C_n by the convolution recurrence.
inline std::vector<long long> catalan_numbers(int n) {
    std::vector<long long> c(static_cast<size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long s = 0;
        for (int i = 0; i < m; ++i)
            s = checked_add(s, checked_mul(c[i], c[m - 1 - i]));
        c[m] = s;
    }
    return c;
}

}  // namespace qtcat

#endif
