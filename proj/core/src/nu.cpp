#include "qtcat/nu.hpp"

#include <algorithm>
#include <cassert>

#include "qtcat/dyck.hpp"
#include "qtcat/util.hpp"

namespace qtcat {

bool is_initial(const Partition& p) {
    return p.empty() || p.part(1) < p.length();
}

bool is_final(const Partition& p) {
    return !p.empty() && p.part(1) > p.length() + 2;
}

std::optional<Partition> nu_opt(const Partition& p) {
    if (is_final(p)) return std::nullopt;
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(p.length()) + 1);
    parts.push_back(p.length() + 1);
    for (int x : p.parts())
        if (x > 1) parts.push_back(x - 1);
    return Partition(std::move(parts));
}

Partition nu(const Partition& p) {
    auto r = nu_opt(p);
    if (!r) throw FinalPartitionError("nu undefined on final partition " + partition_label(p));
    return *std::move(r);
}

std::optional<Partition> nu_inv_opt(const Partition& p) {
    if (is_initial(p)) return std::nullopt;
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(p.part(1)));
    for (int i = 2; i <= p.length(); ++i) parts.push_back(p.part(i) + 1);
    for (int i = 0; i < p.part(1) - p.length(); ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

Partition nu_inv(const Partition& p) {
    auto r = nu_inv_opt(p);
    if (!r)
        throw InitialPartitionError("nu_inv undefined on initial partition " +
                                    partition_label(p));
    return *std::move(r);
}

NuSegment nu_segment(const Partition& p, int max_dinv) {
    Partition first = p;
    while (auto prev = nu_inv_opt(first)) first = *std::move(prev);

    NuSegment seg;
    seg.start_dinv = dinv(first);
    Partition cur = std::move(first);
    int d = seg.start_dinv;
    for (;;) {
        seg.members.push_back(cur);
        if (d >= max_dinv) {
            seg.open_right = !is_final(cur);
            break;
        }
        auto next = nu_opt(cur);
        if (!next) break;
        cur = *std::move(next);
        ++d;
    }
    return seg;
}

Partition tail_initiator(const Partition& mu) {
    if (mu.empty()) return Partition{};
    const int n = mu.length() + mu.part(1) + 1;
    std::vector<int> mult(static_cast<size_t>(mu.part(1)) + 1, 0);
    for (int x : mu.parts()) ++mult[static_cast<size_t>(x)];

    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    v.push_back(0);
    for (int j = 1; j <= mu.part(1); ++j) {
        v.push_back(0);
        for (int c = 0; c < mult[static_cast<size_t>(j)]; ++c) v.push_back(1);
    }
    assert(static_cast<int>(v.size()) == n);
    return from_dyck_vector(DyckVector(std::move(v)));
}

int tail_start_dinv(const Partition& mu) {
    const long long n = mu.empty() ? 1 : mu.part(1) + mu.length() + 1;
    return static_cast<int>(binom2(n) - mu.length() - size(mu));
}

int tail_mind(const Partition& mu) {
    return mu.empty() ? 0 : mu.part(1) + mu.length() + 1;
}

std::optional<Partition> tail_type_of(const Partition& p) {
    if (p.empty()) return Partition{};
    const int n = mind(p);
    const DyckVector v = to_dyck_vector(p, n);
    // shape 0, 0, 1^{n_1}, 0, 1^{n_2}, 0, ..., 0, 1^{n_{mu_1}}
    if (v.order() < 2 || v.entry(1) != 0 || v.entry(2) != 0) return std::nullopt;
    std::vector<int> runs;  // consecutive-1 run after each 0 from position 2 on
    int i = 2;
    while (i <= v.order()) {
        if (v.entry(i) != 0) return std::nullopt;
        int run = 0;
        while (i + 1 <= v.order() && v.entry(i + 1) == 1) {
            ++run;
            ++i;
        }
        runs.push_back(run);
        ++i;
    }
    std::vector<int> parts;
    for (int j = static_cast<int>(runs.size()); j >= 1; --j)
        for (int c = 0; c < runs[static_cast<size_t>(j - 1)]; ++c) parts.push_back(j);
    Partition mu(std::move(parts));
    if (tail_initiator(mu) != p) return std::nullopt;
    return mu;
}

}  // namespace qtcat
