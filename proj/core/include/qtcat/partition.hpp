#ifndef QTCAT_PARTITION_HPP
#define QTCAT_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qtcat {

/// An integer partition: a weakly decreasing finite sequence of positive
/// integers, possibly empty. Canonical form stores no zero parts; trailing
/// zeros in the input are dropped, anything else non-monotone is rejected.
/// Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of positive parts.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; indices past the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Orders partitions lexicographically descending on part lists, the
/// canonical order for enumeration streams and serialized chain data.
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return b.parts() < a.parts();
    }
};

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// |p|: number of cells of the diagram.
int size(const Partition& p);

/// Conjugate partition p' (column lengths of the diagram). An involution.
Partition conjugate(const Partition& p);

/// Number of diagram cells c with arm(c) - leg(c) in {0, 1}.
int dinv(const Partition& p);

/// defc(p) = |p| - dinv(p); always nonnegative.
int deficit(const Partition& p);

/// Least n with the diagram of p inside the staircase triangle Delta_n,
/// i.e. max_i (p_i + i); mind(()) = 0 by the Delta_0 = empty convention.
int mind(const Partition& p);

/// Cells of Delta_n outside p: binom(n,2) - |p|. Requires mind(p) <= n.
int area(const Partition& p, int n);

/// With n = mind(p), the least m >= 0 with p'_{m+1} = n - m - 1; the diagram
/// first touches the diagonal of Delta_n at (m+1, m+1). Requires p nonempty.
int first_return(const Partition& p);

/// Reads "5 4 1 1 1", "5,4,1,1,1", the digit-string form "54111" (parts <= 9
/// only), or "-" for the empty partition.
Partition parse_partition(const std::string& text);

/// Canonical text form: space-separated parts, "-" when empty.
std::string format_partition(const Partition& p);

/// Compact display form "(5,4,1,1,1)"; "()" when empty.
std::string partition_label(const Partition& p);

}  // namespace qtcat

#endif
