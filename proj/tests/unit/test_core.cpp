#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qtcat/dyck.hpp"
#include "qtcat/enumerate.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/util.hpp"

using namespace qtcat;

namespace {

// Independent oracle: statistics straight off the diagram, cell by cell,
// with the conjugate recounted from scratch.
int oracle_dinv(const Partition& p) {
    const auto& parts = p.parts();
    int count = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 1; j <= parts[i]; ++j) {
            int col_height = 0;
            for (int x : parts)
                if (x >= j) ++col_height;
            const int arm = parts[i] - j;
            const int leg = col_height - static_cast<int>(i) - 1;
            if (arm - leg == 0 || arm - leg == 1) ++count;
        }
    }
    return count;
}

Partition oracle_conjugate(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1; j <= (p.empty() ? 0 : p.part(1)); ++j) {
        int height = 0;
        for (int x : p.parts())
            if (x >= j) ++height;
        cols.push_back(height);
    }
    return Partition(cols);
}

Partition random_partition(std::mt19937& rng, int n) {
    std::vector<int> parts;
    int remaining = n;
    int bound = n;
    while (remaining > 0) {
        std::uniform_int_distribution<int> dist(1, std::min(bound, remaining));
        const int v = dist(rng);
        parts.push_back(v);
        bound = v;
        remaining -= v;
    }
    return Partition(parts);
}

}  // namespace

TEST_CASE("statistics of the worked example (5,4,1,1,1)") {
    const Partition g{5, 4, 1, 1, 1};
    CHECK(size(g) == 12);
    CHECK(g.length() == 5);
    CHECK(dinv(g) == 8);
    CHECK(deficit(g) == 4);
    CHECK(mind(g) == 6);
    CHECK(area(g, 7) == 9);
    CHECK(area(g, 6) == 3);
    CHECK(first_return(g) == 0);
    CHECK_THROWS_AS(area(g, 5), std::domain_error);
}

TEST_CASE("size") {
    CHECK(size(Partition{}) == 0);
    CHECK(size(Partition{3, 3, 3}) == 9);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{5, 5, 3, 3, 1}) == Partition{5, 4, 4, 2, 2});
    CHECK(conjugate(Partition{5, 5, 3, 3, 1}) == oracle_conjugate(Partition{5, 5, 3, 3, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
}

TEST_CASE("dinv against the per-cell oracle") {
    CHECK(dinv(Partition{}) == 0);
    CHECK(oracle_dinv(Partition{3, 1}) == 4);
    CHECK(dinv(Partition{3, 1}) == 4);
    for (int n = 0; n <= 12; ++n)
        for_each_partition_of(n, [&](const Partition& p) { CHECK(dinv(p) == oracle_dinv(p)); });
}

TEST_CASE("deficit") {
    CHECK(deficit(Partition{}) == 0);
    CHECK(oracle_dinv(Partition{2, 2, 2, 1}) == 3);
    CHECK(deficit(Partition{2, 2, 2, 1}) == 4);
    // brute scan of Par(7) for the deficit-0 members
    std::vector<Partition> zero;
    for_each_partition_of(7, [&](const Partition& p) {
        if (deficit(p) == 0) zero.push_back(p);
    });
    CHECK(zero == std::vector<Partition>{Partition{4, 2, 1}});
}

TEST_CASE("mind") {
    CHECK(mind(Partition{}) == 0);
    CHECK(mind(Partition{6, 6, 5, 4, 2, 1, 1}) == 8);
}

TEST_CASE("first_return") {
    CHECK(first_return(Partition{5, 5, 3, 3, 1}) == 2);  // n = 7, m = 2
    CHECK(first_return(Partition{1}) == 0);
    CHECK_THROWS_AS(first_return(Partition{}), std::domain_error);
}

TEST_CASE("area of the empty partition") {
    CHECK(area(Partition{}, 0) == 0);
    CHECK(area(Partition{}, 3) == 3);
}

TEST_CASE("dvmap and dpmap") {
    const Partition g{5, 4, 1, 1, 1};
    CHECK(to_dyck_vector(g, 7) == DyckVector{0, 1, 1, 2, 3, 1, 1});
    CHECK(to_dyck_vector(Partition{}, 3) == DyckVector{0, 1, 2});
    CHECK(to_dyck_vector(Partition{2, 1}, 3) == DyckVector{0, 0, 0});
    CHECK_THROWS_AS(to_dyck_vector(g, 5), std::domain_error);

    CHECK(from_dyck_vector(DyckVector{0, 1, 1, 2, 3, 1, 1}) == g);
    CHECK(from_dyck_vector(DyckVector{0, 1, 2}) == Partition{});
    CHECK(from_dyck_vector(DyckVector{0, 0, 1, 1, 1, 0, 0, 1, 0, 1}) ==
          Partition{8, 8, 6, 6, 5, 3, 2, 1, 1});
}

TEST_CASE("Dyck vector validation") {
    CHECK_THROWS_AS((DyckVector{1, 0}), std::invalid_argument);
    CHECK_THROWS_AS((DyckVector{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS((DyckVector{0, -1}), std::invalid_argument);
}

TEST_CASE("Dyck vector statistics") {
    const DyckVector v{0, 1, 1, 2, 3, 1, 1};
    CHECK(dinv(v) == 8);
    CHECK(area(v) == 9);
    CHECK(deficit(v) == 4);
    CHECK(dinv(DyckVector{0}) == 0);
    CHECK(dinv(DyckVector{0, 1, 2}) == 0);  // strictly increasing: no pairs
    CHECK(area(DyckVector{0, 0, 0}) == 0);
}

TEST_CASE("round trip and statistic transport over DP(n), n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        int count = 0;
        for_each_dyck_partition(n, [&](const Partition& p) {
            ++count;
            for (const int order : {mind(p), mind(p) + 3}) {
                const DyckVector v = to_dyck_vector(p, order);
                CHECK(from_dyck_vector(v) == p);
                CHECK(dinv(v) == dinv(p));
                CHECK(area(v) == area(p, order));
                CHECK(deficit(v) == deficit(p));
            }
        });
        CHECK(count == catalan_numbers(9)[static_cast<size_t>(n)]);
    }
    // and the reverse direction on a fixed vector
    const DyckVector v{0, 1, 0, 1, 1, 2};
    CHECK(to_dyck_vector(from_dyck_vector(v), v.order()) == v);
}

TEST_CASE("DP(n) enumeration") {
    const auto dp3 = dyck_partitions(3);
    const std::set<Partition> got(dp3.begin(), dp3.end());
    const std::set<Partition> want = {Partition{}, Partition{1}, Partition{2}, Partition{1, 1},
                                      Partition{2, 1}};
    CHECK(got == want);
    CHECK(std::is_sorted(dp3.begin(), dp3.end(), DescLex{}));
    CHECK(dyck_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(dyck_partitions(5).size() == 42);

    const auto cat = catalan_numbers(12);
    for (int n = 0; n <= 12; ++n) {
        long long count = 0;
        for_each_dyck_partition(n, [&](const Partition&) { ++count; });
        CHECK(count == cat[static_cast<size_t>(n)]);
    }
}

TEST_CASE("deficit is nonnegative") {
    for (int n = 0; n <= 18; ++n)
        for_each_partition_of(n, [&](const Partition& p) { CHECK(deficit(p) >= 0); });
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uniform_int_distribution<int> dist(19, 30);
        CHECK(deficit(random_partition(rng, dist(rng))) >= 0);
    }
}

TEST_CASE("conjugate is a size-preserving involution and preserves mind") {
    for (int n = 0; n <= 15; ++n)
        for_each_partition_of(n, [&](const Partition& p) {
            const Partition c = conjugate(p);
            CHECK(conjugate(c) == p);
            CHECK(size(c) == size(p));
            CHECK(mind(c) == mind(p));
        });
}

TEST_CASE("enumerate_deficit") {
    CHECK(enumerate_deficit(4, 1) == std::vector<Partition>{Partition{1, 1, 1, 1, 1}});
    CHECK(enumerate_deficit(0, 0) == std::vector<Partition>{Partition{}});
    // (6) rides through dinv 2 inside the chain of (4); the dinv-2 slice of
    // Def(4) therefore has three members, not just the two chain starts
    CHECK(enumerate_deficit(4, 2) ==
          std::vector<Partition>{Partition{6}, Partition{2, 2, 1, 1},
                                 Partition{2, 1, 1, 1, 1}});

    // against the brute filter the contract names
    for (int k = 0; k <= 5; ++k)
        for (int i = 0; i <= 8; ++i) {
            std::vector<Partition> brute;
            for_each_partition_of(k + i, [&](const Partition& p) {
                if (deficit(p) == k && dinv(p) == i) brute.push_back(p);
            });
            std::sort(brute.begin(), brute.end(), DescLex{});
            CHECK(enumerate_deficit(k, i) == brute);
        }
}

TEST_CASE("deficit_window matches enumerate_deficit slices") {
    const auto window = deficit_window(3, 10);
    REQUIRE(window.size() == 11);
    for (int i = 0; i <= 10; ++i)
        CHECK(window[static_cast<size_t>(i)] == enumerate_deficit(3, i));
}

TEST_CASE("partition construction and text forms") {
    CHECK(Partition{5, 4, 0, 0} == Partition{5, 4});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({5, 0, 4}), std::invalid_argument);

    CHECK(parse_partition("5 4 1 1 1") == Partition{5, 4, 1, 1, 1});
    CHECK(parse_partition("5,4,1,1,1") == Partition{5, 4, 1, 1, 1});
    CHECK(parse_partition("54111") == Partition{5, 4, 1, 1, 1});
    CHECK(parse_partition("6654211") == Partition{6, 6, 5, 4, 2, 1, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("12") == Partition{12});  // not weakly decreasing as digits
    CHECK(parse_partition("12 10") == Partition{12, 10});
    CHECK_THROWS_AS(parse_partition("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("abc"), std::invalid_argument);

    CHECK(format_partition(Partition{5, 4, 1, 1, 1}) == "5 4 1 1 1");
    CHECK(format_partition(Partition{}) == "-");
    CHECK(parse_partition(format_partition(Partition{12, 10, 3})) == Partition{12, 10, 3});
    CHECK(partition_label(Partition{3, 1}) == "(3,1)");
    CHECK(partition_label(Partition{}) == "()");
}
