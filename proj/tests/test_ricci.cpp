#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circle7/ricci.hpp"
#include "testutil.hpp"

using namespace circle7;
using testutil::Rng;

TEST_CASE("s_metric frozen examples") {
    CHECK(s_metric(0, 1, 2) == make_rat(-1, 32));
    CHECK(s_metric(2, 3, 2) == make_rat(-23, 224));
    CHECK_THROWS_AS(s_metric(1, 1, 1), hypothesis_error);   // not spin
    CHECK_THROWS_AS(s_metric(1, 2, 0), hypothesis_error);   // not M1
}

TEST_CASE("s1 is minus the metric s-value mod Z") {
    Rng rng(107);
    for (int i = 0; i < 500; ++i) {
        BundleParams t = testutil::spin_m1(rng, 50);
        CHECK(s1(t.m, t.n, t.l) == QmodZ(-s_metric(t.m, t.n, t.l)));
    }
}

TEST_CASE("delta0") {
    CHECK(delta0(3) == 84);
    CHECK(delta0(1) == 2);
    CHECK(delta0(5) == 100);
    CHECK(delta0(-3) == 84);
    CHECK_THROWS_AS(delta0(4), hypothesis_error);
    CHECK_THROWS_AS(delta0(0), hypothesis_error);
    // Always an integer: 3 divides n whenever mu3(n) = 1.
    for (long n = 1; n <= 99; n += 2) CHECK(delta0(n) > 0);
}

TEST_CASE("ricci_family frozen example") {
    MetricFamilyReport rep = ricci_family(3, 2, 2, 3);
    CHECK(rep.step == 84);
    REQUIRE(rep.entries.size() == 3);
    CHECK(rep.entries[0].m == 2);
    CHECK(rep.entries[1].m == 86);
    CHECK(rep.entries[2].m == 170);
    CHECK(rep.entries[0].s_value == make_rat(-23, 224));
    CHECK(rep.entries[1].s_value == make_rat(-695, 224));
    CHECK(rep.entries[2].s_value == make_rat(-1367, 224));
    for (const auto& e : rep.entries) CHECK(e.verdict == VerdictKind::Diffeomorphic);

    MetricFamilyReport single = ricci_family(3, 2, 2, 1);
    CHECK(single.entries.size() == 1);
}

TEST_CASE("ricci_family rejects bad inputs") {
    CHECK_THROWS_AS(ricci_family(3, 2, 3, 2), hypothesis_error);   // m0 odd
    CHECK_THROWS_AS(ricci_family(4, 2, 2, 2), hypothesis_error);   // n even
    CHECK_THROWS_AS(ricci_family(3, 3, 2, 2), hypothesis_error);   // l odd
    CHECK_THROWS_AS(ricci_family(3, -2, 2, 2), hypothesis_error);  // l < 0
    CHECK_THROWS_AS(ricci_family(3, 2, 0, 2), hypothesis_error);   // m0 below the bound
    CHECK_THROWS_AS(ricci_family(3, 4, 2, 2), hypothesis_error);   // bound is 3 here
    CHECK_THROWS_AS(ricci_family(3, 2, 6, 2), hypothesis_error);   // gcd(m0,n) = 3
}

TEST_CASE("below-bound start works with the documented override") {
    MetricFamilyReport rep = ricci_family(3, 2, 0, 2, /*allow_sign_mixed=*/true);
    CHECK(rep.entries.size() == 2);
    CHECK(rep.entries[0].s_value > rep.entries[1].s_value);
}

TEST_CASE("s-values form the expected arithmetic progression") {
    Rng rng(109);
    for (int i = 0; i < 30; ++i) {
        long n = 2 * testutil::pick(rng, 1, 7) + 1;
        long l = 2 * testutil::pick(rng, 1, 6);
        long m0 = 2 * testutil::pick(rng, 1, 400);
        if (gcd(Int(m0), Int(n)) != 1) continue;
        Int n2 = Int(n) * n;
        Rat lower = make_rat(n2 * ((Int(l) * l + 4) * (Int(l) * l + 4) - 4 * l),
                             3 * (n2 + 3) * (n2 - 1) * l);
        if (!(Rat(m0) > lower)) continue;
        MetricFamilyReport rep = ricci_family(n, l, m0, 5);
        Rat diff = make_rat(-3 * rep.step * (n2 + 3) * (n2 - 1), 896 * n2);
        CHECK(diff < 0);
        for (std::size_t k = 1; k < rep.entries.size(); ++k) {
            CHECK(rep.entries[k].s_value - rep.entries[k - 1].s_value == diff);
            CHECK(rep.entries[k].s_value < 0);
            CHECK(gcd(gcd(rep.entries[k].m, Int(n)), Int(l)) == 1);
        }
    }
}
