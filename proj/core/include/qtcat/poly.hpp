#ifndef QTCAT_POLY_HPP
#define QTCAT_POLY_HPP

#include <map>
#include <string>
#include <utility>

namespace qtcat {

/// Sparse polynomial in q and t with exact nonnegative integer coefficients.
/// Terms are keyed by (t-exponent, q-exponent) so iteration follows the
/// canonical serialization order; zero coefficients are never stored.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;  // (t_exp, q_exp)

    BivariatePoly() = default;

    void add_term(int q_exp, int t_exp, long long coeff);
    long long coeff(int q_exp, int t_exp) const;
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, long long>& terms() const { return terms_; }

    BivariatePoly& operator+=(const BivariatePoly& other);

    /// Exchange q and t exponents in every term.
    BivariatePoly swap_qt() const;
    bool is_symmetric() const { return *this == swap_qt(); }

    /// Restriction to terms of total degree >= floor.
    BivariatePoly truncate_degree_at_least(int floor) const;

    long long evaluate_ones() const;  // value at q = t = 1

    /// "c*q^a*t^b" terms joined by '+', ascending (t-exp, q-exp); "0" when empty.
    std::string to_string() const;
    /// CSV rows "a,b,c" = (q-exp, t-exp, coefficient), same order.
    std::string to_csv() const;

    bool operator==(const BivariatePoly&) const = default;

private:
    std::map<Key, long long> terms_;
};

}  // namespace qtcat

#endif
