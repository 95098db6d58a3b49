#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "sympair/hilbert.hpp"

using namespace sympair;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

// Independent oracle for U(1,1): the dimension of the zero-weight subspace
// of the degree-d symmetric tensors of gl_2. Basis monomials are indexed by
// exponents (e11, e12, e21, e22) with e12 = e21 under the torus weights.
long weight_zero_count(int d) {
    long count = 0;
    for (int e11 = 0; e11 <= d; ++e11) {
        for (int e12 = 0; e12 <= d; ++e12) {
            for (int e21 = 0; e21 <= d; ++e21) {
                int e22 = d - e11 - e12 - e21;
                if (e22 < 0) continue;
                if (e12 == e21) ++count;
            }
        }
    }
    return count;
}

std::vector<Int> series_ints(const TruncatedSeries& s) { return s.integer_coefficients(); }

}  // namespace

TEST_CASE("degree zero is always one") {
    for (const SymPairCase& c :
         {SymPairCase::upq(1, 1), SymPairCase::glnr(1), SymPairCase::glnc(1), SymPairCase::glmh(1),
          SymPairCase::sostar(1), SymPairCase::spmr(1), SymPairCase::onc(1), SymPairCase::spmc(1),
          SymPairCase::opq(1, 1), SymPairCase::sppq(1, 1)}) {
        CHECK(h_d(c, 0) == 1);
    }
}

TEST_CASE("U(1,1) series matches the weight-zero oracle") {
    TruncatedSeries s = hilbert_series(SymPairCase::upq(1, 1), 6);
    CHECK(series_ints(s.truncated(4)) == ints({1, 2, 4, 6, 9}));
    for (int d = 0; d <= 6; ++d) {
        CHECK(s.coeff(d) == Rat(weight_zero_count(d)));
    }
}

TEST_CASE("GL(1,R) series is all ones") {
    CHECK(series_ints(hilbert_series(SymPairCase::glnr(1), 5)) == ints({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("GL(2,R) degree two") {
    CHECK(h_d(SymPairCase::glnr(2), 2) == 3);
}

TEST_CASE("GL(1,C) series counts torus pairs") {
    CHECK(series_ints(hilbert_series(SymPairCase::glnc(1), 3)) == ints({1, 2, 3, 4}));
    TruncatedSeries s = hilbert_series(SymPairCase::glnc(1), 6);
    for (int d = 0; d <= 6; ++d) CHECK(s.coeff(d) == Rat(d + 1));
}

TEST_CASE("O(n,C) at stable size") {
    CHECK(h_d(SymPairCase::onc(4), 1) == 0);
    CHECK(h_d(SymPairCase::onc(4), 2) == 3);
}

TEST_CASE("stable sequences") {
    std::vector<Int> glc, glr, orth;
    for (int d = 0; d <= 4; ++d) glc.push_back(stable_h_d(StableClass::GL_C, d));
    CHECK(glc == ints({1, 2, 6, 14, 34}));
    for (int d = 0; d <= 3; ++d) glr.push_back(stable_h_d(StableClass::GL_R, d));
    CHECK(glr == ints({1, 1, 3, 5}));
    for (int d = 0; d <= 3; ++d) orth.push_back(stable_h_d(StableClass::OrthSymp, d));
    CHECK(orth == ints({1, 0, 3, 0}));
}

TEST_CASE("stable orth-symplectic coefficients in odd degrees") {
    // Odd coefficients vanish through degree 5 and first become nonzero at
    // degree 7 (the trace of a length-7 word in two antisymmetric matrices is
    // the first with no reversal symmetry; there are two such chiral classes).
    // The degree-7 value is pinned after cross-checking all four member
    // enumerations and the polynomial oracle.
    for (int d = 1; d <= 5; d += 2) {
        CHECK(stable_h_d(StableClass::OrthSymp, d) == 0);
    }
    CHECK(stable_h_d(StableClass::OrthSymp, 7) == 2);
}

TEST_CASE("stable GL-type sequences are weakly increasing") {
    for (StableClass cls : {StableClass::GL_R, StableClass::GL_C}) {
        Int prev = 0;
        for (int d = 0; d <= 8; ++d) {
            Int cur = stable_h_d(cls, d);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("saturation: large parameters reach the stable value") {
    for (int d = 0; d <= 5; ++d) {
        int n = std::max(d, 1);
        CHECK(h_d(SymPairCase::glnr(n), d) == stable_h_d(StableClass::GL_R, d));
        CHECK(h_d(SymPairCase::spmr(n), d) == stable_h_d(StableClass::GL_R, d));
        CHECK(h_d(SymPairCase::glmh(n), d) == stable_h_d(StableClass::GL_R, d));
        CHECK(h_d(SymPairCase::sostar(n), d) == stable_h_d(StableClass::GL_R, d));
        CHECK(h_d(SymPairCase::onc(std::max(2 * d, 1)), d) == stable_h_d(StableClass::OrthSymp, d));
        CHECK(h_d(SymPairCase::spmc(n), d) == stable_h_d(StableClass::OrthSymp, d));
        CHECK(h_d(SymPairCase::opq(n, n), d) == stable_h_d(StableClass::OrthSymp, d));
        CHECK(h_d(SymPairCase::sppq(n, n), d) == stable_h_d(StableClass::OrthSymp, d));
        CHECK(h_d(SymPairCase::glnc(n), d) == stable_h_d(StableClass::GL_C, d));
        CHECK(h_d(SymPairCase::upq(n, n), d) == stable_h_d(StableClass::GL_C, d));
    }
}

TEST_CASE("monotonicity in the size parameters") {
    for (int d = 0; d <= 4; ++d) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(h_d(SymPairCase::glnr(k), d) <= h_d(SymPairCase::glnr(k + 1), d));
            CHECK(h_d(SymPairCase::glnc(k), d) <= h_d(SymPairCase::glnc(k + 1), d));
            CHECK(h_d(SymPairCase::glmh(k), d) <= h_d(SymPairCase::glmh(k + 1), d));
            CHECK(h_d(SymPairCase::sostar(k), d) <= h_d(SymPairCase::sostar(k + 1), d));
            CHECK(h_d(SymPairCase::spmr(k), d) <= h_d(SymPairCase::spmr(k + 1), d));
            CHECK(h_d(SymPairCase::onc(k), d) <= h_d(SymPairCase::onc(k + 1), d));
            CHECK(h_d(SymPairCase::spmc(k), d) <= h_d(SymPairCase::spmc(k + 1), d));
            for (int l = 1; l <= 3; ++l) {
                CHECK(h_d(SymPairCase::upq(k, l), d) <= h_d(SymPairCase::upq(k + 1, l), d));
                CHECK(h_d(SymPairCase::upq(k, l), d) <= h_d(SymPairCase::upq(k, l + 1), d));
                CHECK(h_d(SymPairCase::opq(k, l), d) <= h_d(SymPairCase::opq(k + 1, l), d));
                CHECK(h_d(SymPairCase::opq(k, l), d) <= h_d(SymPairCase::opq(k, l + 1), d));
                CHECK(h_d(SymPairCase::sppq(k, l), d) <= h_d(SymPairCase::sppq(k + 1, l), d));
                CHECK(h_d(SymPairCase::sppq(k, l), d) <= h_d(SymPairCase::sppq(k, l + 1), d));
            }
        }
    }
}

TEST_CASE("paired-case stability") {
    StabilityReport r = stability_check(SymPairCase::glnr(2), SymPairCase::spmr(2), 2);
    CHECK(r.within_threshold);
    CHECK(r.pass);
    CHECK(r.value_a == 3);
    CHECK(r.value_b == 3);

    StabilityReport u = stability_check(SymPairCase::glnc(1), SymPairCase::upq(1, 1), 1);
    CHECK(u.within_threshold);
    CHECK(u.pass);
    CHECK(u.value_a == 2);
    CHECK(u.value_b == 2);

    // d = 0 lies inside every threshold and both sides are 1.
    for (auto [a, b] : std::vector<std::pair<SymPairCase, SymPairCase>>{
             {SymPairCase::glnr(1), SymPairCase::spmr(1)},
             {SymPairCase::glmh(1), SymPairCase::sostar(1)},
             {SymPairCase::onc(2), SymPairCase::sppq(1, 1)},
             {SymPairCase::spmc(1), SymPairCase::opq(2, 2)},
             {SymPairCase::glnc(1), SymPairCase::upq(1, 1)}}) {
        StabilityReport z = stability_check(a, b, 0);
        CHECK(z.within_threshold);
        CHECK(z.pass);
        CHECK(z.value_a == 1);
        CHECK(z.value_b == 1);
    }

    // Argument order is immaterial.
    StabilityReport swapped = stability_check(SymPairCase::spmr(2), SymPairCase::glnr(2), 2);
    CHECK(swapped.pass);

    CHECK_THROWS_AS(stability_check(SymPairCase::glnr(1), SymPairCase::glnc(1), 1),
                    std::invalid_argument);
}

TEST_CASE("stability over the full parameter grid") {
    // Every in-threshold pair with parameters up to 4 and d up to 4.
    for (int d = 0; d <= 4; ++d) {
        for (int x = 1; x <= 4; ++x) {
            for (int y = 1; y <= 4; ++y) {
                CHECK(stability_check(SymPairCase::glnr(x), SymPairCase::spmr(y), d).pass);
                CHECK(stability_check(SymPairCase::glmh(x), SymPairCase::sostar(y), d).pass);
                for (int z = 1; z <= 4; ++z) {
                    CHECK(stability_check(SymPairCase::onc(x), SymPairCase::sppq(y, z), d).pass);
                    CHECK(stability_check(SymPairCase::spmc(x), SymPairCase::opq(y, z), d).pass);
                    CHECK(stability_check(SymPairCase::glnc(x), SymPairCase::upq(y, z), d).pass);
                }
            }
        }
    }
}

TEST_CASE("stable family equalities") {
    CheckReport r = stable_family_equalities(3);
    INFO(r.summary());
    CHECK(r.pass);
    CheckReport r0 = stable_family_equalities(0);
    CHECK(r0.pass);
}

TEST_CASE("g series") {
    CHECK(g_series(Partition{}, Partition{}, 4) == TruncatedSeries::one(4));
    CHECK(g_series(Partition{1}, Partition{1}, 6) == principal_specialization(Partition{1}, 6));
    // sign (x) trivial = sign concentrates the sum on one term.
    CHECK(g_series(Partition{1, 1}, Partition{2}, 6) ==
          principal_specialization(Partition{1, 1}, 6));
    // Off-size arguments give the zero series.
    CHECK(g_series(Partition{1}, Partition{2}, 4) == TruncatedSeries(4));
}

TEST_CASE("stable branching multiplicities") {
    for (int d = 0; d <= 4; ++d) {
        for (const Partition& rho : partitions_of(d)) {
            CHECK(stable_branching_multiplicity(rho, Partition{}, Partition{}) == 1);
        }
    }
    CHECK(stable_branching_multiplicity(Partition{1}, Partition{1}, Partition{1}) == 1);
    CHECK(stable_branching_multiplicity(Partition{2, 1}, Partition{1}, Partition{1}) == 2);
    CHECK(stable_branching_multiplicity(Partition{1}, Partition{2}, Partition{1}) == 0);
    CHECK(stable_branching_multiplicity(Partition{1}, Partition{2}, Partition{2}) == 0);
}

TEST_CASE("branching series identity, small cases") {
    CHECK(stan84_check(Partition{}, Partition{}, 5).pass);
    CHECK(stan84_check(Partition{1}, Partition{1}, 4).pass);
    CHECK(stan84_check(Partition{1, 1}, Partition{2}, 4).pass);
    CHECK_THROWS_AS(stan84_check(Partition{1}, Partition{2, 1}, 3), std::invalid_argument);
}

TEST_CASE("diagonal kronecker sum matches the named product") {
    CheckReport r2 = h_sum_check(2);
    CHECK(r2.pass);
    CheckReport r4 = h_sum_check(4);
    CHECK(r4.pass);
}

TEST_CASE("squared-sum series matches the doubling product") {
    CHECK(ctheorem_check(4).pass);
}

TEST_CASE("harmonic quotients") {
    CHECK(series_ints(harmonic_series(1, 1, 4)) == ints({1, 1, 1, 1, 1}));
    // Stable parameters reproduce the named product through D = 4.
    CHECK(series_ints(harmonic_series(4, 4, 4)) ==
          named_series(SeriesName::H, std::nullopt, 4).integer_coefficients());
    CHECK(series_ints(harmonic_series(1, 2, 0)) == ints({1}));
}

TEST_CASE("skew square comparison") {
    CheckReport r = skew_identity_check(2, 2);
    INFO(r.summary());
    CHECK(r.pass);  // agreement expected under the t^k-inside interpretation
}

TEST_CASE("stanley comparison reports both sides") {
    StanleyComparison cmp = stanley_product_comparison(3);
    CHECK(cmp.combinatorial == ints({1, 1, 3, 5}));
    CHECK(cmp.product.coeff(0) == 1);
    CHECK(cmp.product.coeff(1) == Rat(1, 2));
    // The sides differ at t^1; the comparison never asserts equality.
    CHECK(cmp.product.coeff(1) != Rat(cmp.combinatorial[1]));
}

TEST_CASE("case parameter validation") {
    CHECK_THROWS_AS(SymPairCase::upq(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(SymPairCase::glnr(0), std::invalid_argument);
    CHECK_THROWS_AS(h_d(SymPairCase::glnr(1), -1), std::invalid_argument);
}

TEST_CASE("family tokens round trip") {
    for (Family f : {Family::Upq, Family::GLnR, Family::GLnC, Family::GLmH, Family::SOstar2m,
                     Family::SpmR, Family::OnC, Family::SpmC, Family::Opq, Family::Sppq}) {
        CHECK(parse_family(family_token(f)) == f);
        CHECK(stable_class_of(f) == stable_class_of(f));
    }
    CHECK(!parse_family("nope"));
    CHECK(parse_stable_class("gl-r") == StableClass::GL_R);
    CHECK(parse_stable_class("orthsymp") == StableClass::OrthSymp);
    CHECK(parse_stable_class("gl-c") == StableClass::GL_C);
    CHECK(!parse_stable_class("x"));
}
