#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "sympair/oracle_checks.hpp"
#include "sympair/partition.hpp"
#include "sympair/symmetric_group.hpp"

using namespace sympair;

TEST_CASE("centralizer orders") {
    CHECK(z_order(Partition{}) == 1);
    CHECK(z_order(Partition{3}) == 3);
    CHECK(z_order(Partition{2, 1}) == 2);
    CHECK(z_order(Partition{1, 1, 1}) == 6);
    CHECK(z_order(Partition{2, 2, 1}) == 8);
    // Class sizes m!/z sum to the group order.
    for (int m = 0; m <= 8; ++m) {
        Int total = 0;
        for (const Partition& rho : partitions_of(m)) total += factorial(m) / z_order(rho);
        CHECK(total == factorial(m));
    }
}

TEST_CASE("pinned character values") {
    // Trivial representation.
    for (int m = 1; m <= 6; ++m) {
        for (const Partition& rho : partitions_of(m)) {
            CHECK(character_value(Partition{std::vector<int>{m}}, CycleType(rho)) == 1);
        }
    }
    // Sign character: (-1)^(m - #cycles).
    CHECK(character_value(Partition{1, 1, 1}, CycleType(Partition{3})) == 1);
    CHECK(character_value(Partition{1, 1, 1}, CycleType(Partition{2, 1})) == -1);
    for (int m = 1; m <= 6; ++m) {
        Partition sign(std::vector<int>(static_cast<size_t>(m), 1));
        for (const Partition& rho : partitions_of(m)) {
            int expected = (m - rho.length()) % 2 == 0 ? 1 : -1;
            CHECK(character_value(sign, CycleType(rho)) == expected);
        }
    }
    // The standard-plus-trivial row of S_3.
    CHECK(character_value(Partition{2, 1}, CycleType(Partition{1, 1, 1})) == 2);
    CHECK(character_value(Partition{2, 1}, CycleType(Partition{2, 1})) == 0);
    CHECK(character_value(Partition{2, 1}, CycleType(Partition{3})) == -1);

    CHECK_THROWS_AS(character_value(Partition{2}, CycleType(Partition{3})), std::invalid_argument);
}

TEST_CASE("row orthogonality of characters") {
    for (int m = 0; m <= 6; ++m) {
        auto shapes = partitions_of(m);
        for (const Partition& lambda : shapes) {
            for (const Partition& mu : shapes) {
                Rat acc(0);
                for (const Partition& rho : shapes) {
                    Int prod = Int(character_value(lambda, CycleType(rho))) *
                               Int(character_value(mu, CycleType(rho)));
                    Rat term(prod, z_order(rho));
                    term.canonicalize();
                    acc += term;
                }
                CHECK(acc == (lambda == mu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("column orthogonality on S_3") {
    auto shapes = partitions_of(3);
    for (const Partition& rho : shapes) {
        for (const Partition& sigma : shapes) {
            Int acc = 0;
            for (const Partition& lambda : shapes) {
                acc += Int(character_value(lambda, CycleType(rho))) *
                       Int(character_value(lambda, CycleType(sigma)));
            }
            CHECK(acc == (rho == sigma ? z_order(rho) : 0));
        }
    }
}

TEST_CASE("sum of squared dimensions is the group order") {
    for (int m = 0; m <= 7; ++m) {
        Partition id(std::vector<int>(static_cast<size_t>(m), 1));
        Int acc = 0;
        for (const Partition& lambda : partitions_of(m)) {
            Int dim(character_value(lambda, CycleType(id)));
            acc += dim * dim;
        }
        CHECK(acc == factorial(m));
    }
}

TEST_CASE("pinned kronecker values") {
    // Tensoring with the trivial representation.
    for (int m = 1; m <= 5; ++m) {
        Partition triv{std::vector<int>{m}};
        for (const Partition& lambda : partitions_of(m)) {
            for (const Partition& mu : partitions_of(m)) {
                CHECK(kronecker_coefficient(lambda, mu, triv) == (lambda == mu ? 1 : 0));
            }
        }
    }
    // sign (x) sign = trivial.
    CHECK(kronecker_coefficient(Partition{2}, Partition{1, 1}, Partition{1, 1}) == 1);
    CHECK(kronecker_coefficient(Partition{1, 1}, Partition{1, 1}, Partition{2}) == 1);
    // The S_3 standard representation tensor square contains everything once.
    CHECK(kronecker_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);

    CHECK_THROWS_AS(kronecker_coefficient(Partition{2}, Partition{1}, Partition{2}),
                    std::invalid_argument);
}

TEST_CASE("kronecker coefficients are symmetric in all three slots") {
    for (int m = 0; m <= 5; ++m) {
        auto shapes = partitions_of(m);
        for (const Partition& a : shapes) {
            for (const Partition& b : shapes) {
                for (const Partition& c : shapes) {
                    Int g = kronecker_coefficient(a, b, c);
                    CHECK(g == kronecker_coefficient(a, c, b));
                    CHECK(g == kronecker_coefficient(b, a, c));
                    CHECK(g == kronecker_coefficient(b, c, a));
                    CHECK(g == kronecker_coefficient(c, a, b));
                    CHECK(g == kronecker_coefficient(c, b, a));
                }
            }
        }
    }
}

TEST_CASE("conjugation character identity") {
    for (int m = 0; m <= 5; ++m) {
        CheckReport report = conjugation_character_check(m);
        INFO(report.name);
        CHECK(report.pass);
    }
    // Spot check the m = 2 values: the expansion is 2*s_(2) and nothing else.
    CheckReport r2 = conjugation_character_check(2);
    REQUIRE(r2.pass);
    Int diag_2 = kronecker_coefficient(Partition{2}, Partition{2}, Partition{2}) +
                 kronecker_coefficient(Partition{2}, Partition{1, 1}, Partition{1, 1});
    Int diag_11 = kronecker_coefficient(Partition{1, 1}, Partition{2}, Partition{2}) +
                  kronecker_coefficient(Partition{1, 1}, Partition{1, 1}, Partition{1, 1});
    CHECK(diag_2 == 2);
    CHECK(diag_11 == 0);
}

TEST_CASE("triple kernel expansion matches the character engine") {
    for (int m = 0; m <= 2; ++m) {
        CheckReport report = triple_cauchy_g_check(m, std::max(m, 1));
        INFO(report.name);
        CHECK(report.pass);
    }
}
