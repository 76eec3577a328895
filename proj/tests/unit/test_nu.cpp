#include <doctest.h>

#include <map>
#include <set>

#include "qtcat/enumerate.hpp"
#include "qtcat/nu.hpp"
#include "qtcat/staircase.hpp"
#include "qtcat/util.hpp"

using namespace qtcat;

TEST_CASE("nu on the worked examples") {
    CHECK(nu(Partition{5, 4, 1, 1, 1}) == Partition{6, 4, 3});
    CHECK_THROWS_AS(nu(Partition{6, 4, 3}), FinalPartitionError);
    CHECK(nu(Partition{}) == Partition{1});
}

TEST_CASE("nu_inv") {
    CHECK(nu_inv(Partition{6, 4, 3}) == Partition{5, 4, 1, 1, 1});
    CHECK_THROWS_AS(nu_inv(Partition{3, 3, 3, 1}), InitialPartitionError);
    CHECK(nu_inv(Partition{1}) == Partition{});
    CHECK_THROWS_AS(nu_inv(Partition{}), InitialPartitionError);
}

TEST_CASE("initial and final predicates") {
    CHECK(is_initial(Partition{3, 3, 3, 1}));
    CHECK(is_final(Partition{6, 4, 3}));
    CHECK(is_initial(Partition{}));
    CHECK(!is_final(Partition{}));
    CHECK(!is_initial(Partition{5, 4, 1, 1, 1}));
    CHECK(!is_final(Partition{5, 4, 1, 1, 1}));
}

TEST_CASE("nu raises dinv by one and preserves deficit") {
    for (int n = 0; n <= 18; ++n)
        for_each_partition_of(n, [&](const Partition& p) {
            const auto next = nu_opt(p);
            CHECK(next.has_value() == !is_final(p));
            if (next) {
                CHECK(dinv(*next) == dinv(p) + 1);
                CHECK(deficit(*next) == deficit(p));
                CHECK(size(*next) == size(p) + 1);
                CHECK(nu_inv(*next) == p);
            }
            if (auto prev = nu_inv_opt(p)) CHECK(nu(*prev) == p);
        });
}

TEST_CASE("nu_segment of (5,2,2,2)") {
    const NuSegment seg = nu_segment(Partition{5, 2, 2, 2}, 100);
    const std::vector<Partition> want = {Partition{3, 3, 3, 1}, Partition{5, 2, 2, 2},
                                         Partition{5, 4, 1, 1, 1}, Partition{6, 4, 3}};
    CHECK(seg.members == want);
    CHECK(!seg.open_right);
    CHECK(seg.start_dinv == dinv(Partition{3, 3, 3, 1}));
}

TEST_CASE("nu_segment of the empty partition is the deficit-0 orbit") {
    const NuSegment seg = nu_segment(Partition{}, 5);
    const std::vector<Partition> want = {Partition{},     Partition{1},    Partition{2},
                                         Partition{2, 1}, Partition{3, 1}, Partition{3, 2}};
    CHECK(seg.members == want);
    CHECK(seg.start_dinv == 0);
    CHECK(seg.open_right);
}

TEST_CASE("nu_segment of TI(4,1,1) truncated at dinv 21") {
    const NuSegment seg = nu_segment(Partition{6, 6, 5, 4, 2, 1, 1}, 21);
    REQUIRE(seg.members.size() == 3);
    CHECK(seg.start_dinv == 19);
    CHECK(seg.members[0] == Partition{6, 6, 5, 4, 2, 1, 1});
    CHECK(seg.members[1] == Partition{8, 5, 5, 4, 3, 1});
    CHECK(seg.members[2] == Partition{7, 7, 4, 4, 3, 2});
    CHECK(seg.open_right);
}

TEST_CASE("tail initiators") {
    CHECK(tail_initiator(Partition{4, 3, 1, 1, 1}) == Partition{8, 8, 6, 6, 5, 3, 2, 1, 1});
    CHECK(tail_initiator(Partition{4, 1, 1}) == Partition{6, 6, 5, 4, 2, 1, 1});
    CHECK(dinv(tail_initiator(Partition{4, 1, 1})) == 19);
    CHECK(tail_initiator(Partition{}) == Partition{});
    CHECK(tail_initiator(Partition{4, 2}) == Partition{5, 5, 4, 2, 2, 1});
}

TEST_CASE("tail_start_dinv closed form") {
    CHECK(tail_start_dinv(Partition{4, 1, 1}) == 19);
    CHECK(tail_start_dinv(Partition{4, 2}) == 13);
    CHECK(tail_start_dinv(Partition{9}) == 45);
    CHECK(tail_start_dinv(Partition{}) == 0);
    for (int k = 0; k <= 12; ++k)
        for_each_partition_of(k, [&](const Partition& mu) {
            CHECK(tail_start_dinv(mu) == dinv(tail_initiator(mu)));
            CHECK(deficit(tail_initiator(mu)) == k);
            CHECK(mind(tail_initiator(mu)) == tail_mind(mu));
        });
}

TEST_CASE("every TI(mu) is an initial partition, k <= 9") {
    for (int k = 0; k <= 9; ++k)
        for_each_partition_of(k, [&](const Partition& mu) {
            CHECK(is_initial(tail_initiator(mu)));
        });
}

TEST_CASE("tail_type_of recovers mu") {
    for (int k = 0; k <= 9; ++k)
        for_each_partition_of(k, [&](const Partition& mu) {
            const auto got = tail_type_of(tail_initiator(mu));
            REQUIRE(got.has_value());
            CHECK(*got == mu);
        });
    CHECK(!tail_type_of(Partition{5, 4, 1, 1, 1}).has_value());
    REQUIRE(tail_type_of(Partition{1, 1}).has_value());  // TI((1)) = (1,1)
    CHECK(*tail_type_of(Partition{1, 1}) == Partition{1});
}

TEST_CASE("segments partition finite deficit windows") {
    for (int k = 0; k <= 3; ++k) {
        const int cutoff = 12;
        const auto window = deficit_window(k, cutoff);
        std::map<Partition, Partition> segment_initial;
        std::set<Partition> all;
        for (const auto& slice : window)
            for (const auto& p : slice) all.insert(p);
        for (const auto& p : all) {
            const NuSegment seg = nu_segment(p, cutoff);
            for (const auto& q : seg.members) {
                if (dinv(q) > cutoff) continue;
                auto [it, inserted] = segment_initial.emplace(q, seg.members.front());
                // every member always reports the same segment initial
                if (!inserted) CHECK(it->second == seg.members.front());
            }
        }
        for (const auto& p : all) CHECK(segment_initial.count(p) == 1);
    }
}

TEST_CASE("mind along nu-iterates is a staircase (Prop nu-stair)") {
    for (int n = 1; n <= 14; ++n)
        for_each_partition_of(n, [&](const Partition& p) {
            const Staircase expected{dinv(p), first_return(p), mind(p), std::nullopt};
            Partition cur = p;
            const int steps = 3 * mind(p);
            for (int i = 0; i <= steps; ++i) {
                CHECK(mind(cur) == staircase_value(expected, dinv(p) + i));
                auto next = nu_opt(cur);
                if (!next) break;
                cur = *std::move(next);
            }
        });
}
