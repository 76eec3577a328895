#ifndef QTCAT_CATALAN_HPP
#define QTCAT_CATALAN_HPP

#include <vector>

#include "qtcat/partition.hpp"
#include "qtcat/poly.hpp"
#include "qtcat/staircase.hpp"

namespace qtcat {

/// Enumeration cap for qt_catalan; Catalan(14) is about 2.7M objects.
inline constexpr int kQtCatalanCap = 14;

/// Cat_n(q, t) = sum over partitions inside Delta_n of q^area_n t^dinv,
/// by exhaustive Dyck-vector enumeration. Requires n <= kQtCatalanCap.
BivariatePoly qt_catalan(int n);

/// Cat_{n,S}(q, t) over an explicit finite collection of partitions
/// (members with mind > n contribute nothing).
BivariatePoly qt_catalan_restricted(const std::vector<Partition>& s, int n);

/// True when the terms of total degree >= floor form a q<->t symmetric
/// polynomial.
bool top_symmetric_upto(const BivariatePoly& p, int floor);

/// Cat_{n,S} computed from a mind-sequence instead of the members:
/// sum of q^{binom(n,2)-k-i} t^i over the window points with F(i) <= n.
/// The window must contain every i with F(i) <= n; the staircase pieces
/// of F certify that via their threshold sets.
BivariatePoly restricted_from_mind_word(const StepFunction& f, int k, int n);

}  // namespace qtcat

#endif
