#include "qtcat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtcat {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition_of(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace {

// Bottom-up walker over partitions of deficit <= k and size <= size_max.
// State is the partition as a weakly increasing list of rows (bottom first),
// its column counts, accumulated dinv, and deficit so far. Prepending a top
// row of length p adds the cells (1, j), j <= p, whose legs are the current
// column counts; arms and legs of the existing cells are unchanged, so
//   dinv' = dinv + #{ j <= p : p - j - cols[j] in {0, 1} }
// and the deficit gain p - #{...} is nonnegative.
struct DeficitWalker {
    int k;
    int size_max;
    const std::function<void(const std::vector<int>&, int, int)>& visit;
    std::vector<int> rising;  // rows, bottom first (weakly increasing)
    std::vector<int> cols;    // cols[j-1] = current height of column j

    void run() {
        visit({}, 0, 0);  // the empty partition
        descend(1, 0, 0);
    }

    // Try every new top row p >= min_part while size and deficit allow.
    void descend(int min_part, int sz, int defc) {
        for (int p = min_part; sz + p <= size_max; ++p) {
            int gained = 0;
            for (int j = 1; j <= p; ++j) {
                const int col = j <= static_cast<int>(cols.size())
                                    ? cols[static_cast<size_t>(j - 1)]
                                    : 0;
                const int d = p - j - col;
                if (d == 0 || d == 1) ++gained;
            }
            const int defc2 = defc + (p - gained);
            if (defc2 > k) continue;
            rising.push_back(p);
            if (static_cast<int>(cols.size()) < p) cols.resize(static_cast<size_t>(p), 0);
            for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
            visit(rising, sz + p, defc2);
            descend(p, sz + p, defc2);
            for (int j = 0; j < p; ++j) --cols[static_cast<size_t>(j)];
            rising.pop_back();
        }
    }
};

void walk_deficit(int k, int size_max,
                  const std::function<void(const std::vector<int>&, int, int)>& visit) {
    DeficitWalker w{k, size_max, visit, {}, {}};
    w.run();
}

Partition from_rising(const std::vector<int>& rising) {
    std::vector<int> parts(rising.rbegin(), rising.rend());
    return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> enumerate_deficit(int k, int i) {
    if (k < 0 || i < 0) throw std::invalid_argument("enumerate_deficit: negative argument");
    std::vector<Partition> out;
    walk_deficit(k, k + i, [&](const std::vector<int>& rising, int sz, int defc) {
        if (defc == k && sz == k + i) out.push_back(from_rising(rising));
    });
    std::sort(out.begin(), out.end(), DescLex{});
    return out;
}

std::vector<std::vector<Partition>> deficit_window(int k, int max_dinv) {
    if (k < 0 || max_dinv < 0)
        throw std::invalid_argument("deficit_window: negative argument");
    std::vector<std::vector<Partition>> out(static_cast<size_t>(max_dinv) + 1);
    walk_deficit(k, k + max_dinv, [&](const std::vector<int>& rising, int sz, int defc) {
        if (defc == k)
            out[static_cast<size_t>(sz - k)].push_back(from_rising(rising));
    });
    for (auto& slice : out) std::sort(slice.begin(), slice.end(), DescLex{});
    return out;
}

}  // namespace qtcat
