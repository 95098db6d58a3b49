#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "sympair/partition.hpp"

using namespace sympair;

namespace {

// Independent oracle for partition counts: the pentagonal-number recurrence
// p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
std::vector<long long> partition_numbers(int max_n) {
    std::vector<long long> p(static_cast<size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

}  // namespace

TEST_CASE("size and length") {
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{}.length() == 0);
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{2, 2, 1}.size() == 5);
    CHECK(Partition{2, 2, 1}.length() == 3);
}

TEST_CASE("construction rejects bad part lists") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
}

TEST_CASE("conjugate is an involution up to size 12") {
    for (int d = 0; d <= 12; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(p.conjugate().length() == p.first_part());
        }
    }
}

TEST_CASE("doubling") {
    CHECK(Partition{2, 1}.doubled() == Partition{4, 2});
    CHECK(Partition{1}.doubled_conjugate() == Partition{1, 1});
    CHECK(Partition{}.doubled() == Partition{});
    CHECK(Partition{}.doubled_conjugate() == Partition{});
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(p.doubled().has_even_rows());
            CHECK(p.doubled_conjugate().has_even_columns());
            CHECK(p.doubled().length() == p.length());
            CHECK(p.doubled().size() == 2 * p.size());
            CHECK(p.doubled_conjugate().length() <= 2 * p.size());
            CHECK(p.doubled().half_rows() == p);
        }
    }
}

TEST_CASE("even-column recognition matches the conjugate definition") {
    for (int d = 0; d <= 10; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(p.has_even_columns() == p.conjugate().has_even_rows());
        }
    }
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
    auto expected = partition_numbers(20);
    for (int d = 0; d <= 20; ++d) {
        CHECK(partitions_of(d).size() == static_cast<size_t>(expected[static_cast<size_t>(d)]));
    }
}

TEST_CASE("enumeration order and bounds") {
    auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0] == Partition{4});
    CHECK(ps[1] == Partition{3, 1});
    CHECK(ps[2] == Partition{2, 2});
    CHECK(ps[3] == Partition{2, 1, 1});
    CHECK(ps[4] == Partition{1, 1, 1, 1});

    auto bounded = partitions_of(3, 2);
    REQUIRE(bounded.size() == 2);
    CHECK(bounded[0] == Partition{3});
    CHECK(bounded[1] == Partition{2, 1});

    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});

    // Bounded enumerations are exactly the filtered full list, in order.
    for (int d = 0; d <= 10; ++d) {
        auto all = partitions_of(d);
        for (int len = 0; len <= 4; ++len) {
            std::vector<Partition> filtered;
            for (const Partition& p : all) {
                if (p.length() <= len) filtered.push_back(p);
            }
            CHECK(partitions_of(d, len) == filtered);
        }
        for (int cap = 1; cap <= 4; ++cap) {
            std::vector<Partition> filtered;
            for (const Partition& p : all) {
                if (p.first_part() <= cap) filtered.push_back(p);
            }
            CHECK(partitions_of(d, std::nullopt, cap) == filtered);
        }
    }
}

TEST_CASE("every generated partition satisfies length <= size") {
    for (int d = 0; d <= 15; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(p.length() <= p.size());
        }
    }
}

TEST_CASE("hooks and n-stat") {
    CHECK(Partition{1}.hook_lengths() == std::vector<int>{1});
    CHECK(Partition{1}.n_stat() == 0);
    auto h21 = Partition{2, 1}.hook_lengths();
    std::sort(h21.begin(), h21.end());
    CHECK(h21 == std::vector<int>{1, 1, 3});
    CHECK(Partition{2, 1}.n_stat() == 1);
    auto h3 = Partition{3}.hook_lengths();
    std::sort(h3.begin(), h3.end());
    CHECK(h3 == std::vector<int>{1, 2, 3});
    CHECK(Partition{3}.n_stat() == 0);
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(p.hook_lengths().size() == static_cast<size_t>(p.size()));
        }
    }
}

TEST_CASE("signed tuple split") {
    auto [mu, nu] = SignedTuple({2, 1, 0, 0, -3}).split();
    CHECK(mu == Partition{2, 1});
    CHECK(nu == Partition{3});

    auto [m0, n0] = SignedTuple({0, 0, 0}).split();
    CHECK(m0 == Partition{});
    CHECK(n0 == Partition{});

    auto [m1, n1] = SignedTuple({1, 1, -1, -1}).split();
    CHECK(m1 == Partition{1, 1});
    CHECK(n1 == Partition{1, 1});

    CHECK_THROWS_AS(SignedTuple({1, 2, 0}), std::invalid_argument);
}

TEST_CASE("embed then split round trip") {
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            for (const Partition& mu : partitions_of(a)) {
                for (const Partition& nu : partitions_of(b)) {
                    int n = mu.length() + nu.length();
                    for (int extra = 0; extra <= 2; ++extra) {
                        SignedTuple w = SignedTuple::embed(mu, nu, n + extra);
                        auto [m2, n2] = w.split();
                        CHECK(m2 == mu);
                        CHECK(n2 == nu);
                        CHECK(SignedTuple::embed(m2, n2, n + extra) == w);
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(SignedTuple::embed(Partition{1, 1}, Partition{1}, 2), std::invalid_argument);
}

TEST_CASE("text round trip") {
    CHECK(Partition{4, 2, 1}.to_string() == "4,2,1");
    CHECK(Partition{}.to_string() == "[]");
    CHECK(Partition::parse("4,2,1") == Partition{4, 2, 1});
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(Partition::parse("none") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(Partition::parse(p.to_string()) == p);
        }
    }
}

TEST_CASE("containment") {
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK(Partition{3, 2}.contains(Partition{}));
    CHECK_FALSE(Partition{3, 2}.contains(Partition{1, 1, 1}));
    CHECK_FALSE(Partition{1}.contains(Partition{2}));
}
