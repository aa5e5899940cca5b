#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circle7/sinv.hpp"
#include "testutil.hpp"

using namespace circle7;
using testutil::Rng;

namespace {

// First-principles model of the coboundary pairings, independent of the
// closed forms in the library. H^2 of the base is Q{alpha, beta, gamma},
// H^4 is Q{alpha*beta, beta^2, gamma^2} (alpha^2 = 0, mixed products with
// gamma vanish). For degree-4 classes u = e.c1, v = e.c2 the relative
// pairing is <c1*c2*e, [base]>.
struct H2v {
    Rat a, b, c;
};
struct H4v {
    Rat ab, bb, gg;
};

H4v mul2(const H2v& u, const H2v& v) {
    return {u.a * v.b + v.a * u.b, u.b * v.b, u.c * v.c};
}

// Solve e.(a,b,c) = w for the Euler class e = m alpha + n beta + l gamma:
// the cup product sends (a,b,c) to (m b + n a, n b, l c).
H2v solve_euler(const H4v& w, const Int& m, const Int& n, const Int& l) {
    Rat b = w.bb / Rat(n);
    Rat a = (w.ab - Rat(m) * b) / Rat(n);
    Rat c = w.gg / Rat(l);
    return {a, b, c};
}

Rat pair_h4(const H4v& u, const H4v& v, const Int& m, const Int& n, const Int& l) {
    H2v c1 = solve_euler(u, m, n, l), c2 = solve_euler(v, m, n, l);
    H4v prod = mul2(c1, c2);
    return Rat(n) * prod.ab + Rat(m) * prod.bb + Rat(l) * prod.gg;
}

// The ten monomial numbers for a polarization given by two H^2 vectors of
// the base, in the standard column order.
CharNums10 charnums_model(const Int& m, const Int& n, const Int& l, const H2v& x, const H2v& y) {
    H4v p1{Rat(2 * m * n), Rat(n * n + 3), Rat(l * l + 4)};
    H4v xx = mul2(x, x), xy = mul2(x, y), yy = mul2(y, y);
    return {pair_h4(p1, p1, m, n, l), pair_h4(xx, p1, m, n, l), pair_h4(xy, p1, m, n, l),
            pair_h4(yy, p1, m, n, l), pair_h4(xx, xx, m, n, l), pair_h4(xx, xy, m, n, l),
            pair_h4(xx, yy, m, n, l), pair_h4(xy, xy, m, n, l), pair_h4(xy, yy, m, n, l),
            pair_h4(yy, yy, m, n, l)};
}

H2v combine(const Int& s, const H2v& u, const Int& t, const H2v& v) {
    return {Rat(s) * u.a + Rat(t) * v.a, Rat(s) * u.b + Rat(t) * v.b,
            Rat(s) * u.c + Rat(t) * v.c};
}

}  // namespace

TEST_CASE("monomial charnums, nl route, frozen examples") {
    auto c = monomial_charnums_nl(0, 1, 2, Polarization::identity());
    CHECK(c[0] == 32);            // p1^2
    CHECK(c[1] == 4);             // x^2 p1
    CHECK(c[4] == make_rat(1, 2));  // (x^2)^2
    // All q-proportional terms vanish since the canonical pair is (1,0).
    CHECK(c[2] == 0);
    CHECK(c[3] == 0);
    CHECK(c[5] == 0);
    CHECK(c[9] == 0);

    c = monomial_charnums_nl(2, 3, 2, Polarization::identity());
    CHECK(c[0] == 96);

    CHECK_THROWS_AS(monomial_charnums_nl(2, 3, 3, Polarization::identity()), hypothesis_error);
    CHECK_THROWS_AS(monomial_charnums_nl(1, 3, 2, Polarization::identity()), hypothesis_error);
    CHECK_THROWS_AS(monomial_charnums_nl(0, 3, 2, Polarization{2, 0, 0, 2}), hypothesis_error);
}

TEST_CASE("monomial charnums, mn route, frozen examples") {
    // (2,3,2) with canonical (u,v) = (2,-1).
    auto c = monomial_charnums_mn(2, 3, 2, Polarization::identity());
    // x^2 p1 = u - 3uvn - 3u/n^2 - 3uv/n = 2 + 18 - 2/3 + 2 = 64/3.
    CHECK(c[1] == make_rat(64, 3));
    // (x^2)^2 = -u^3(1/n^2 + 3v/n) + B^4/l with B = 0: -8(1/9 - 1) = 64/9.
    CHECK(c[4] == make_rat(64, 9));
    CHECK_THROWS_AS(monomial_charnums_mn(0, 1, 2, Polarization::identity()), hypothesis_error);
    CHECK_THROWS_AS(monomial_charnums_mn(2, 4, 1, Polarization::identity()), hypothesis_error);
}

TEST_CASE("monomial numbers match the first-principles pairing model") {
    Rng rng(163);
    for (int i = 0; i < 200; ++i) {
        BundleParams t = testutil::spin_m1_nl(rng);
        Polarization g = testutil::unimodular(rng, 6);
        auto [p, q] = bezout_nl(t.n, t.l);
        H2v z{Rat(0), Rat(-q), Rat(p)}, alpha{Rat(1), Rat(0), Rat(0)};
        H2v x = combine(g.A, z, g.B, alpha), y = combine(g.C, z, g.D, alpha);
        CharNums10 model = charnums_model(t.m, t.n, t.l, x, y);
        CHECK(monomial_charnums_nl(t.m, t.n, t.l, g) == model);
        // In particular the model confirms x^2.y^2 = (xy)^2 here.
        CHECK(model[6] == model[7]);
    }
    for (int i = 0; i < 200; ++i) {
        BundleParams t = testutil::spin_m1_mn(rng);
        Polarization g = testutil::unimodular(rng, 6);
        auto [u, v] = bezout_mn(t.m, t.n);
        H2v z{Rat(-v), Rat(u), Rat(0)}, gamma{Rat(0), Rat(0), Rat(1)};
        H2v x = combine(g.A, z, g.B, gamma), y = combine(g.C, z, g.D, gamma);
        CharNums10 model = charnums_model(t.m, t.n, t.l, x, y);
        CHECK(monomial_charnums_mn(t.m, t.n, t.l, g) == model);
        CHECK(model[6] == model[7]);
    }
}

TEST_CASE("the two bases give equal tuples for the same boundary polarization") {
    // On triples satisfying both coprimality hypotheses, the basis
    // (p*z_nl, p*alpha) equals (p*z_mn, p*gamma) times an explicit
    // unimodular matrix modulo the Euler class, so the identity-polarized
    // nl tuple must equal the mn tuple at that matrix: the coboundary
    // extensions differ only by multiples of the Euler class, which the
    // invariant cannot see.
    Rng rng(167);
    int done = 0;
    while (done < 150) {
        BundleParams t = testutil::spin_m1(rng);
        if (t.m == 0 || gcd(t.n, t.l) != 1 || gcd(t.m, t.n) != 1) continue;
        auto [p, q] = bezout_nl(t.n, t.l);
        auto [u, v] = bezout_mn(t.m, t.n);
        Polarization g0{-q * t.m, p + q * v * t.l, -t.n, -u * t.l};
        REQUIRE(g0.det() == 1);
        CHECK(s_invariant_nl(t.m, t.n, t.l, Polarization::identity()) ==
              s_invariant_mn(t.m, t.n, t.l, g0));
        ++done;
    }
}

TEST_CASE("p1^2 agrees across the two routes on their common domain") {
    Rng rng(61);
    int done = 0;
    while (done < 100) {
        BundleParams t = testutil::spin_m1(rng);
        if (t.m == 0 || gcd(t.n, t.l) != 1 || gcd(t.m, t.n) != 1) continue;
        Polarization g = testutil::unimodular(rng, 4);
        auto a = monomial_charnums_nl(t.m, t.n, t.l, g);
        auto b = monomial_charnums_mn(t.m, t.n, t.l, g);
        CHECK(a[0] == b[0]);
        ++done;
    }
}

TEST_CASE("s1 frozen examples") {
    CHECK(s1(0, 1, 2).rep() == make_rat(1, 32));
    CHECK(s1(0, 1, -2).rep() == make_rat(31, 32));
    CHECK(s1(2, 3, 2).rep() == make_rat(23, 224));
}

TEST_CASE("s-invariant frozen examples") {
    auto s = s_invariant_nl(0, 1, 2, Polarization::identity());
    CHECK(s.s[4].rep() == make_rat(1, 4));  // s5 = p^4/(2l)
    CHECK(s.s10 == 0);
    s = s_invariant_nl(2, 3, 2, Polarization::identity());
    CHECK(s.s[4].rep() == make_rat(17, 36));
    CHECK(s.s[0] == s1(2, 3, 2));
    CHECK(s.s10 == 0);
}

TEST_CASE("closed forms equal the table route (both modes)") {
    Rng rng(67);
    for (int i = 0; i < 200; ++i) {
        BundleParams t = testutil::spin_m1_nl(rng);
        Polarization g = testutil::unimodular(rng, 6);
        auto c = monomial_charnums_nl(t.m, t.n, t.l, g);
        // s_invariant_nl itself asserts the two routes agree; recheck here.
        CHECK(s_invariant_nl(t.m, t.n, t.l, g) == s_from_charnums(c, sign(t.l)));
    }
    for (int i = 0; i < 200; ++i) {
        BundleParams t = testutil::spin_m1_mn(rng);
        Polarization g = testutil::unimodular(rng, 6);
        auto c = monomial_charnums_mn(t.m, t.n, t.l, g);
        CHECK(s_invariant_mn(t.m, t.n, t.l, g) == s_from_charnums(c, sign(t.l)));
    }
}

TEST_CASE("s1 and S10 are polarization invariants; component 1 equals s1") {
    Rng rng(71);
    for (int i = 0; i < 120; ++i) {
        BundleParams t = testutil::spin_m1_nl(rng);
        Polarization g = testutil::unimodular(rng, 10);
        auto s = s_invariant_nl(t.m, t.n, t.l, g);
        CHECK(s.s[0] == s1(t.m, t.n, t.l));
        CHECK(s.s10 == 0);
    }
    for (int i = 0; i < 120; ++i) {
        BundleParams t = testutil::spin_m1_mn(rng);
        Polarization g = testutil::unimodular(rng, 10);
        auto s = s_invariant_mn(t.m, t.n, t.l, g);
        CHECK(s.s[0] == s1(t.m, t.n, t.l));
        CHECK(s.s10 == 0);
    }
}

TEST_CASE("action matrix: identity and multiplicativity") {
    CHECK(action_matrix(Polarization::identity()) == IntMat::identity(8));
    Rng rng(73);
    for (int i = 0; i < 60; ++i) {
        Polarization g1 = testutil::unimodular(rng, 5), g2 = testutil::unimodular(rng, 5);
        CHECK(action_matrix(g1 * g2) == action_matrix(g1) * action_matrix(g2));
    }
    CHECK_THROWS_AS(action_matrix(Polarization{2, 0, 0, 2}), hypothesis_error);
}

TEST_CASE("L0 is invariant under the standard generators and -I") {
    const IntLattice& l0 = L0_lattice();
    for (Polarization g : {Polarization{0, 1, 1, 0}, Polarization{1, 0, 1, 1},
                           Polarization{-1, 0, 0, -1}}) {
        CHECK(lattice_eq(l0.transformed(action_matrix(g)), l0));
    }
}

TEST_CASE("L0 equals the lattice cut from the bordism table") {
    // Drop the p1^2 and (xy)^2 columns of S(e); the Bott row dies.
    IntMat se = se_matrix();
    IntMat cut(8, 8);
    const std::size_t cols[8] = {1, 2, 3, 4, 5, 6, 8, 9};
    for (std::size_t i = 1; i < 9; ++i)
        for (std::size_t j = 0; j < 8; ++j) cut(i - 1, j) = se(i, cols[j]);
    CHECK(lattice_eq(IntLattice(8, cut), L0_lattice()));
}

TEST_CASE("integrality polynomials") {
    CHECK(f3(5) == 20);
    CHECK(f4(3) == 6);
    CHECK(f2plus(0) == 0);
    CHECK(f2plus(4) == 10);
    CHECK(f2minus(4) == 6);
    CHECK(g2(3, 5) == -15);
    for (long x = -20; x <= 20; ++x) {
        CHECK(2 * f2plus(x) == x * x + x);
        CHECK(6 * f3(x) == x * x * x - x);
        CHECK(12 * f4(x) == x * x * x * x - x * x);
    }
}

TEST_CASE("varsigma equivariance under the action") {
    Rng rng(79);
    for (int i = 0; i < 80; ++i) {
        BundleParams t = testutil::spin_m1_nl(rng);
        Polarization g = testutil::unimodular(rng, 6);
        auto moved = varsigma_vector(t.m, t.n, t.l, g, SMode::NL);
        auto base = varsigma_vector(t.m, t.n, t.l, Polarization::identity(), SMode::NL);
        CHECK(moved == act(base, g));  // exact vector equality
        Coset a = varsigma_coset(t.m, t.n, t.l, g, SMode::NL);
        Coset b{std::vector<Rat>(moved.begin(), moved.end()), &L0_lattice()};
        CHECK(a == b);
    }
    for (int i = 0; i < 80; ++i) {
        BundleParams t = testutil::spin_m1_mn(rng);
        Polarization g = testutil::unimodular(rng, 6);
        auto moved = varsigma_vector(t.m, t.n, t.l, g, SMode::MN);
        auto base = varsigma_vector(t.m, t.n, t.l, Polarization::identity(), SMode::MN);
        CHECK(moved == act(base, g));
    }
}

TEST_CASE("-I fixes every varsigma coset") {
    Rng rng(83);
    Polarization minus{-1, 0, 0, -1};
    for (int i = 0; i < 40; ++i) {
        BundleParams t = testutil::spin_m1_nl(rng);
        auto a = varsigma_vector(t.m, t.n, t.l, minus, SMode::NL);
        auto b = varsigma_vector(t.m, t.n, t.l, Polarization::identity(), SMode::NL);
        CHECK(a == b);
    }
}

TEST_CASE("negating the z column matches the triple with negated n") {
    // (M_{0,n,l}; -z, alpha) has the tuple of (M_{0,-n,l}; z, alpha) with its
    // own canonical pair.
    Rng rng(89);
    Polarization flip{-1, 0, 0, 1};
    for (int i = 0; i < 60; ++i) {
        BundleParams t = testutil::spin_m1_nl(rng);  // only (n,l) is used
        auto a = s_invariant_nl(0, t.n, t.l, flip);
        auto b = s_invariant_nl(0, -t.n, t.l, Polarization::identity());
        CHECK(a == b);
    }
}
