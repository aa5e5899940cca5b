#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circle7/lattice.hpp"

#include <random>

using namespace circle7;

namespace {

IntMat mat(std::size_t r, std::size_t c, std::vector<long> v) {
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
    return m;
}

// Membership via the Smith normal form: x * G = v solvable over Z.
bool contains_by_snf(const IntMat& g, const std::vector<Int>& v) {
    Snf s = snf(g);
    // w = v * V; need y * D = w with free y.
    std::size_t r = g.rows(), c = g.cols();
    std::vector<Int> w(c, 0);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) w[j] += v[i] * s.v(i, j);
    for (std::size_t j = 0; j < c; ++j) {
        Int dj = (j < r && j < c) ? s.d(j, j) : Int(0);
        if (dj == 0) {
            if (w[j] != 0) return false;
        } else if (!divides(dj, w[j])) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("hnf examples") {
    CHECK(hnf(mat(2, 2, {0, 3, 2, 0})) == mat(2, 2, {2, 0, 0, 3}));
    CHECK(hnf(IntMat::identity(3)) == IntMat::identity(3));
    CHECK(hnf(mat(2, 2, {2, 4, 4, 8})) == mat(2, 2, {2, 4, 0, 0}));
}

TEST_CASE("hnf idempotent and span-preserving on random matrices") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
        IntMat h = hnf(m);
        CHECK(hnf(h) == h);
        // Same row span: each generates the other.
        IntLattice lm(c, m), lh(c, h);
        CHECK(lattice_eq(lm, lh));
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(lm.contains(h.row(i)));
            CHECK(lh.contains(m.row(i)));
        }
    }
}

TEST_CASE("snf examples") {
    auto s = snf(mat(2, 2, {2, 0, 0, 4}));
    CHECK(s.d == mat(2, 2, {2, 0, 0, 4}));
    s = snf(mat(2, 2, {2, 0, 0, 3}));
    CHECK(s.d == mat(2, 2, {1, 0, 0, 6}));
    s = snf(mat(2, 2, {0, 0, 0, 0}));
    CHECK(s.d == mat(2, 2, {0, 0, 0, 0}));
}

TEST_CASE("snf transform identity, unimodularity and divisibility chain") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> d(-15, 15);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
        Snf s = snf(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(s.u.det()) == 1);
        CHECK(abs(s.v.det()) == 1);
        for (std::size_t k = 0; k + 1 < std::min(r, c); ++k) {
            CHECK(s.d(k, k) >= 0);
            if (s.d(k, k) != 0) CHECK(divides(s.d(k, k), s.d(k + 1, k + 1)));
            else CHECK(s.d(k + 1, k + 1) == 0);
        }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
    }
}

TEST_CASE("contains examples") {
    IntLattice l(2, mat(2, 2, {2, 0, 0, 3}));
    CHECK(l.contains(std::vector<Int>{4, 3}));
    CHECK_FALSE(l.contains(std::vector<Int>{1, 0}));
    CHECK_THROWS_AS(l.contains(std::vector<Int>{1, 0, 0}), dimension_mismatch);
}

TEST_CASE("contains agrees with SNF solving on random small lattices") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = 1 + rng() % 4, k = 1 + rng() % 6;
        IntMat g(r, k);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) g(i, j) = d(rng);
        IntLattice lat(k, g);
        for (int probe = 0; probe < 10; ++probe) {
            std::vector<Int> v(k);
            if (probe % 2 == 0) {
                // Random integer combination: a member.
                std::vector<Int> coeff(r);
                for (auto& x : coeff) x = d(rng);
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t i = 0; i < r; ++i) v[j] += coeff[i] * g(i, j);
            } else {
                for (auto& x : v) x = d(rng);
            }
            CHECK(lat.contains(v) == contains_by_snf(g, v));
        }
    }
}

TEST_CASE("coset and lattice equality") {
    IntLattice l(2, mat(2, 2, {2, 0, 0, 3}));
    CHECK(coset_eq(l, {Rat(5), Rat(4)}, {Rat(1), Rat(1)}));
    CHECK(coset_eq(l, {Rat(7), Rat(-2)}, {Rat(7), Rat(-2)}));
    CHECK_FALSE(coset_eq(l, {Rat(5), Rat(4)}, {Rat(0), Rat(0)}));

    // Same lattice from different generators and denominators.
    IntLattice a(2, mat(3, 2, {2, 0, 0, 3, 2, 3}));
    CHECK(lattice_eq(l, a));
    IntLattice half(2, mat(2, 2, {4, 0, 0, 6}), 2);
    CHECK(lattice_eq(l, half));
    IntLattice other(2, mat(2, 2, {1, 0, 0, 3}));
    CHECK_FALSE(lattice_eq(l, other));
}

TEST_CASE("rational membership uses the denominator") {
    IntLattice half(2, mat(2, 2, {1, 0, 0, 1}), 2);  // (Z/2)^2 grid
    CHECK(half.contains(std::vector<Rat>{make_rat(1, 2), make_rat(3, 2)}));
    CHECK_FALSE(half.contains(std::vector<Rat>{make_rat(1, 3), Rat(0)}));
}

TEST_CASE("descends_to_quotient examples") {
    auto r = descends_to_quotient(1, 0, 2, 1, 4, 2);
    CHECK(r.exists);
    CHECK(r.is_iso);
    r = descends_to_quotient(1, 0, 0, 1, 12, 35);
    CHECK(r.exists);
    CHECK(r.is_iso);
    r = descends_to_quotient(1, 1, 0, 1, 2, 4);
    CHECK_FALSE(r.exists);
}

TEST_CASE("descends_to_quotient against brute force") {
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b)
                    for (long c = -2; c <= 2; ++c)
                        for (long d = -2; d <= 2; ++d) {
                            auto r = descends_to_quotient(a, b, c, d, m, n);
                            // Well-defined iff images of the generators of
                            // m Z x n Z vanish in Z/m x Z/n.
                            bool exists =
                                ((a * m) % m == 0 && (b * m) % n == 0) &&
                                ((c * n) % m == 0 && (d * n) % n == 0);
                            CHECK(r.exists == exists);
                            if (!exists) continue;
                            // Injectivity on the m*n residues.
                            std::vector<char> seen(std::size_t(m * n), 0);
                            bool inj = true;
                            for (long x = 0; x < m; ++x)
                                for (long y = 0; y < n; ++y) {
                                    long ix = ((a * x + c * y) % m + m) % m;
                                    long iy = ((b * x + d * y) % n + n) % n;
                                    std::size_t key = std::size_t(ix * n + iy);
                                    if (seen[key]) inj = false;
                                    seen[key] = 1;
                                }
                            CHECK(r.is_iso == inj);
                        }
}

TEST_CASE("det and matrix basics") {
    CHECK(mat(2, 2, {0, 1, 1, 0}).det() == -1);
    CHECK(mat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}).det() == 30);
    CHECK(IntMat::identity(4).det() == 1);
    CHECK(mat(2, 2, {2, 4, 1, 2}).det() == 0);
}
