#include "qtcat/partition.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "qtcat/util.hpp"

namespace qtcat {

namespace {

std::vector<int> normalize(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return parts;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(normalize(std::move(parts))) {}

Partition::Partition(std::initializer_list<int> parts)
    : parts_(normalize(std::vector<int>(parts))) {}

int size(const Partition& p) {
    int s = 0;
    for (int x : p.parts()) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> cols(static_cast<size_t>(p.part(1)), 0);
    for (int x : p.parts())
        for (int j = 0; j < x; ++j) ++cols[static_cast<size_t>(j)];
    return Partition(std::move(cols));
}

int dinv(const Partition& p) {
    const Partition conj = conjugate(p);
    int count = 0;
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            const int arm = p.part(i) - j;
            const int leg = conj.part(j) - i;
            const int d = arm - leg;
            if (d == 0 || d == 1) ++count;
        }
    }
    return count;
}

int deficit(const Partition& p) {
    const int d = size(p) - dinv(p);
    assert(d >= 0 && "negative deficit signals a dinv bug");
    return d;
}

int mind(const Partition& p) {
    int n = 0;
    for (int i = 1; i <= p.length(); ++i) n = std::max(n, p.part(i) + i);
    return n;
}

int area(const Partition& p, int n) {
    if (n < 0 || mind(p) > n)
        throw std::domain_error("area: partition does not fit in the n-triangle");
    return static_cast<int>(binom2(n)) - size(p);
}

int first_return(const Partition& p) {
    if (p.empty())
        throw std::domain_error("first_return: empty partition");
    const int n = mind(p);
    const Partition conj = conjugate(p);
    for (int m = 0; m < n; ++m)
        if (conj.part(m + 1) == n - m - 1) return m;
    assert(false && "first-return point must exist below the triangle size");
    return n - 1;
}

Partition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty())
        throw std::invalid_argument("empty partition text (use \"-\")");
    if (t == "-") return Partition{};

    const bool has_sep = text.find_first_of(", \t") != std::string::npos;
    if (has_sep) {
        std::vector<int> parts;
        std::string norm = text;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::istringstream in(norm);
        int x;
        while (in >> x) parts.push_back(x);
        if (!in.eof())
            throw std::invalid_argument("bad partition text: '" + text + "'");
        return Partition(std::move(parts));
    }

    for (char c : t)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad partition text: '" + text + "'");
    if (t.size() > 1 && t.find('0') == std::string::npos) {
        // digit-string compatibility form, one digit per part ("54111");
        // falls back to a single multi-digit part when that reading is
        // not weakly decreasing ("12" -> (12))
        std::vector<int> parts;
        for (char c : t) parts.push_back(c - '0');
        try {
            return Partition(std::move(parts));
        } catch (const std::invalid_argument&) {
        }
    }
    return Partition({std::stoi(t)});
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.parts()[static_cast<size_t>(i)]);
    }
    return out;
}

std::string partition_label(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[static_cast<size_t>(i)]);
    }
    out += ')';
    return out;
}

}  // namespace qtcat
