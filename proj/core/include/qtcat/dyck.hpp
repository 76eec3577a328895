#ifndef QTCAT_DYCK_HPP
#define QTCAT_DYCK_HPP

#include <vector>

#include "qtcat/partition.hpp"

namespace qtcat {

/// A Dyck vector of order n: nonnegative entries with v_1 = 0 and
/// v_{i+1} <= v_i + 1. Alternate coordinates for partitions inside Delta_n.
class DyckVector {
public:
    DyckVector() = default;
    explicit DyckVector(std::vector<int> entries);
    DyckVector(std::initializer_list<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int order() const { return static_cast<int>(entries_.size()); }
    /// 1-based entry access.
    int entry(int i) const { return entries_[static_cast<size_t>(i - 1)]; }

    bool operator==(const DyckVector&) const = default;

private:
    std::vector<int> entries_;
};

/// dvmap_n: v_i = number of external area cells in the i-th row of Delta_n
/// from the bottom, i.e. (0 - p_n, 1 - p_{n-1}, ..., n-1 - p_1).
/// Requires mind(p) <= n.
DyckVector to_dyck_vector(const Partition& p, int n);

/// dpmap_n, the inverse of to_dyck_vector at n = v.order().
Partition from_dyck_vector(const DyckVector& v);

/// Number of pairs i < j with v_i - v_j in {0, 1}.
int dinv(const DyckVector& v);

/// Sum of entries; equals area_n of the corresponding partition.
int area(const DyckVector& v);

/// binom(n,2) - area(v) - dinv(v).
int deficit(const DyckVector& v);

std::string dyck_label(const DyckVector& v);

/// Visits every partition inside Delta_n exactly once, in lexicographic
/// descending part-list order. The visit count is the n-th Catalan number.
template <class F>
void for_each_dyck_partition(int n, F&& fn) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int bound) -> void {
        for (int v = bound; v >= 1; --v) {
            parts.push_back(v);
            const int row = static_cast<int>(parts.size()) + 1;
            self(self, std::min(v, n - row));
            parts.pop_back();
        }
        fn(Partition(parts));
    };
    rec(rec, n - 1);
}

std::vector<Partition> dyck_partitions(int n);

}  // namespace qtcat

#endif
