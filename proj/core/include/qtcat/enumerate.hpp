#ifndef QTCAT_ENUMERATE_HPP
#define QTCAT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "qtcat/partition.hpp"

namespace qtcat {

/// Visits all partitions of n once, lexicographic descending.
template <class F>
void for_each_partition_of(int n, F&& fn) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            fn(Partition(parts));
            return;
        }
        for (int v = std::min(bound, remaining); v >= 1; --v) {
            parts.push_back(v);
            self(self, remaining - v, v);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

std::vector<Partition> partitions_of(int n);

/// All partitions with deficit k and dinv i (equivalently, size k + i),
/// lexicographic descending. These are the dinv-level slices of Def(k).
std::vector<Partition> enumerate_deficit(int k, int i);

/// Def(k) sliced by dinv: result[i] lists the partitions with deficit k and
/// dinv = i for 0 <= i <= max_dinv, each slice lexicographic descending.
///
/// Walks the tree of partitions built bottom row up (each step prepends a
/// new weakly-larger top row). Such a step never decreases the deficit, so
/// any branch whose deficit already exceeds k is cut; the walk touches only
/// partitions of deficit <= k instead of all of Par(<= k + max_dinv).
std::vector<std::vector<Partition>> deficit_window(int k, int max_dinv);

}  // namespace qtcat

#endif
