#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circle7/numtheory.hpp"

#include <random>

using namespace circle7;

TEST_CASE("ext_gcd frozen examples") {
    auto r = ext_gcd(0, 5);
    CHECK(r.g == 5);
    CHECK(r.x == 0);
    CHECK(r.y == 1);
    r = ext_gcd(3, 2);
    CHECK(r.g == 1);
    CHECK(r.x == 1);
    CHECK(r.y == -1);
    r = ext_gcd(12, 18);
    CHECK(r.g == 6);
    CHECK(r.x == -1);
    CHECK(r.y == 1);
    CHECK_THROWS_AS(ext_gcd(0, 0), error);
}

TEST_CASE("ext_gcd identity on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        Int a = d(rng), b = d(rng);
        if (a == 0 && b == 0) continue;
        auto r = ext_gcd(a, b);
        CHECK(r.g >= 0);
        CHECK(r.g == gcd(a, b));
        CHECK(a * r.x + b * r.y == r.g);
    }
}

TEST_CASE("bezout_nl frozen examples and canonicalization") {
    auto r = bezout_nl(1, 5);
    CHECK(r.p == 1);
    CHECK(r.q == 0);
    r = bezout_nl(3, 2);
    CHECK(r.p == -1);
    CHECK(r.q == 2);
    r = bezout_nl(5, 3);
    CHECK(r.p == -1);
    CHECK(r.q == 2);
    CHECK_THROWS_AS(bezout_nl(6, 9), not_coprime);
    CHECK_THROWS_AS(bezout_nl(0, 1), error);
}

TEST_CASE("bezout_nl identity and bound on random coprime pairs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-500, 500);
    int done = 0;
    while (done < 500) {
        Int n = d(rng), l = d(rng);
        if (n == 0 || l == 0 || gcd(n, l) != 1) continue;
        auto r = bezout_nl(n, l);
        CHECK(r.p * n + r.q * l == 1);
        if (abs(n) == 1) {
            CHECK(r.q == 0);
        } else {
            CHECK(r.q >= 0);
            CHECK(r.q < abs(n));
        }
        ++done;
    }
}

TEST_CASE("bezout_mn matches its normalization") {
    auto r = bezout_mn(2, 3);  // u*2 + v*3 = 1, 0 <= u < 3
    CHECK(r.u == 2);
    CHECK(r.v == -1);
    CHECK(r.u * 2 + r.v * 3 == 1);
}

TEST_CASE("padic_valuation") {
    CHECK(padic_valuation(2, 12) == 2);
    CHECK(padic_valuation(7, 7) == 1);
    CHECK(padic_valuation(3, 5) == 0);
    CHECK(padic_valuation(2, -8) == 3);
    CHECK_THROWS_AS(padic_valuation(2, 0), error);
    CHECK_THROWS_AS(padic_valuation(4, 12), error);
}

TEST_CASE("crt_solve examples") {
    auto r = crt_solve({{1, 3}, {2, 4}});
    REQUIRE(r.has_value());
    CHECK(r->r == 10);
    CHECK(r->modulus == 12);
    r = crt_solve({{0, 1}});
    REQUIRE(r.has_value());
    CHECK(r->r == 0);
    CHECK(r->modulus == 1);
    CHECK_FALSE(crt_solve({{1, 2}, {0, 2}}).has_value());
    CHECK_THROWS_AS(crt_solve({{1, -3}}), error);
}

TEST_CASE("crt_solve against brute force") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> md(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<Int, Int>> cs;
        long prod = 1;
        int k = 1 + int(rng() % 3);
        for (int i = 0; i < k; ++i) {
            long mi = md(rng);
            prod *= mi;
            if (prod > 1000000) break;
            cs.push_back({Int(long(rng() % mi)), Int(mi)});
        }
        auto r = crt_solve(cs);
        // Brute force over 0..lcm-1.
        long L = 1;
        for (auto& [ri, mi] : cs) L = std::lcm(L, mi.get_si());
        long expect = -1;
        for (long x = 0; x < L; ++x) {
            bool ok = true;
            for (auto& [ri, mi] : cs)
                if ((x - ri.get_si()) % mi.get_si() != 0) ok = false;
            if (ok) {
                expect = x;
                break;
            }
        }
        if (expect < 0) {
            CHECK_FALSE(r.has_value());
        } else {
            REQUIRE(r.has_value());
            CHECK(r->r == expect);
            CHECK(r->modulus == L);
            for (auto& [ri, mi] : cs) CHECK(divides(mi, r->r - ri));
        }
    }
}

TEST_CASE("QmodZ representative and group laws") {
    CHECK(QmodZ(make_rat(7, 4)).rep() == make_rat(3, 4));
    CHECK(QmodZ(make_rat(-1, 4)).rep() == make_rat(3, 4));
    CHECK(QmodZ(Rat(5)).rep() == 0);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        long dn = 1 + long(rng() % 40);
        QmodZ a(make_rat(d(rng), dn)), b(make_rat(d(rng), dn)), c(make_rat(d(rng), dn));
        CHECK((a + b) + c == a + (b + c));
        CHECK(-(-a) == a);
        CHECK(a + (-a) == QmodZ());
        CHECK(a.rep() >= 0);
        CHECK(a.rep() < 1);
    }
}
