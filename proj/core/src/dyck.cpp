#include "qtcat/dyck.hpp"

#include <stdexcept>

#include "qtcat/util.hpp"

namespace qtcat {

namespace {

std::vector<int> validate(std::vector<int> entries) {
    if (!entries.empty() && entries.front() != 0)
        throw std::invalid_argument("Dyck vector must start with 0");
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0)
            throw std::invalid_argument("Dyck vector entries must be nonnegative");
        if (i + 1 < entries.size() && entries[i + 1] > entries[i] + 1)
            throw std::invalid_argument("Dyck vector may rise by at most 1");
    }
    return entries;
}

}  // namespace

DyckVector::DyckVector(std::vector<int> entries) : entries_(validate(std::move(entries))) {}

DyckVector::DyckVector(std::initializer_list<int> entries)
    : entries_(validate(std::vector<int>(entries))) {}

DyckVector to_dyck_vector(const Partition& p, int n) {
    if (n < 0 || mind(p) > n)
        throw std::domain_error("to_dyck_vector: partition does not fit in the n-triangle");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        v[static_cast<size_t>(i - 1)] = (i - 1) - p.part(n - i + 1);
    return DyckVector(std::move(v));
}

Partition from_dyck_vector(const DyckVector& v) {
    const int n = v.order();
    std::vector<int> parts(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        parts[static_cast<size_t>(i - 1)] = n - i - v.entry(n - i + 1);
    return Partition(std::move(parts));
}

int dinv(const DyckVector& v) {
    const auto& e = v.entries();
    int count = 0;
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
            const int d = e[i] - e[j];
            if (d == 0 || d == 1) ++count;
        }
    return count;
}

int area(const DyckVector& v) {
    int s = 0;
    for (int x : v.entries()) s += x;
    return s;
}

int deficit(const DyckVector& v) {
    return static_cast<int>(binom2(v.order())) - area(v) - dinv(v);
}

std::string dyck_label(const DyckVector& v) {
    std::string out = "(";
    for (int i = 0; i < v.order(); ++i) {
        if (i) out += ',';
        out += std::to_string(v.entries()[static_cast<size_t>(i)]);
    }
    out += ')';
    return out;
}

std::vector<Partition> dyck_partitions(int n) {
    if (n < 0) throw std::invalid_argument("dyck_partitions: n must be nonnegative");
    std::vector<Partition> out;
    for_each_dyck_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace qtcat
