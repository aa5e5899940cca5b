#include "circle7/sinv.hpp"

namespace circle7 {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw hypothesis_error(msg);
}

void check_spin_triple(const Int& m, const Int& n, const Int& l) {
    require(n != 0 && l != 0, "spin M1 triple needs n, l nonzero");
    require(gcd(gcd(m, n), l) == 1, "triple must have gcd(m,n,l) = 1");
    require(is_even(m) && is_odd(n) && is_even(l), "triple must be (0,1,0) mod 2");
}

Rat rr(const Int& num, const Int& den) { return make_rat(num, den); }

}  // namespace

CharNums10 monomial_charnums_nl(const Int& m, const Int& n, const Int& l, const Polarization& g) {
    check_spin_triple(m, n, l);
    require(gcd(n, l) == 1, "monomial_charnums_nl: needs gcd(n,l) = 1");
    require(g.unimodular(), "polarization must be unimodular");
    auto [p, q] = bezout_nl(n, l);
    const Int &A = g.A, &B = g.B, &C = g.C, &D = g.D;
    Int n2 = n * n;

    Rat E = rr(p * p * p * p, l) - rr(q * q * q * q * m, n2);
    // The m-term carries n^2: expanding <c(x^2) c(p1) e> directly gives
    // q^2 m (n^2-3)/n^2 (the mn-basis analogue collapses to integer shape
    // through u*m = 1 - v*n; no such collapse exists here).
    Rat F = rr(q * q * m * (n2 - 3), n2) + rr(p * p * (l * l + 4), l);
    Rat G = rr(q * (n2 + 3), n);
    Rat H = rr(q * q * q, n);

    CharNums10 c;
    c[0] = rr(3 * m * (n2 - 1) * (n2 + 3), n2) + rr((l * l + 4) * (l * l + 4), l);
    c[1] = Rat(A * A) * F - Rat(2 * A * B) * G;
    c[2] = Rat(A * C) * F - Rat(A * D + B * C) * G;
    c[3] = Rat(C * C) * F - Rat(2 * C * D) * G;
    c[4] = Rat(A * A * A * A) * E - Rat(4 * A * A * A * B) * H;
    c[5] = Rat(A * A * A * C) * E - Rat(A * A * (A * D + 3 * B * C)) * H;
    c[6] = Rat(A * A * C * C) * E - Rat(2 * A * C * (A * D + B * C)) * H;
    c[7] = c[6];  // x^2.y^2 and (xy)^2 coincide for this coboundary
    c[8] = Rat(A * C * C * C) * E - Rat(C * C * (3 * A * D + B * C)) * H;
    c[9] = Rat(C * C * C * C) * E - Rat(4 * C * C * C * D) * H;
    return c;
}

CharNums10 monomial_charnums_mn(const Int& m, const Int& n, const Int& l, const Polarization& g) {
    check_spin_triple(m, n, l);
    require(m != 0, "monomial_charnums_mn: needs m != 0");
    require(gcd(m, n) == 1, "monomial_charnums_mn: needs gcd(m,n) = 1");
    require(g.unimodular(), "polarization must be unimodular");
    auto [u, v] = bezout_mn(m, n);
    const Int &A = g.A, &B = g.B, &C = g.C, &D = g.D;
    Int n2 = n * n;

    Rat P = Rat(u - 3 * u * v * n) - rr(3 * u, n2) - rr(3 * u * v, n);
    Rat Q = rr(l * l + 4, l);
    Rat R = rr(u * u * u, n2) + rr(3 * u * u * u * v, n);

    CharNums10 c;
    c[0] = rr(3 * m * (n2 - 1) * (n2 + 3), n2) + rr((l * l + 4) * (l * l + 4), l);
    c[1] = Rat(A * A) * P + Rat(B * B) * Q;
    c[2] = Rat(A * C) * P + Rat(B * D) * Q;
    c[3] = Rat(C * C) * P + Rat(D * D) * Q;
    c[4] = -Rat(A * A * A * A) * R + rr(B * B * B * B, l);
    c[5] = -Rat(A * A * A * C) * R + rr(B * B * B * D, l);
    c[6] = -Rat(A * A * C * C) * R + rr(B * B * D * D, l);
    c[7] = c[6];
    c[8] = -Rat(A * C * C * C) * R + rr(B * D * D * D, l);
    c[9] = -Rat(C * C * C * C) * R + rr(D * D * D * D, l);
    return c;
}

SInvariant s_from_charnums(const CharNums10& c, int sgn_l) {
    static const IntMat T = s_coordinate_change();
    static const CanonicalDivisors div = canonical_divisors();
    // S-coordinates of the monomial vector.
    std::array<Rat, 10> s{};
    for (std::size_t j = 0; j < 10; ++j) {
        Rat acc(0);
        for (std::size_t i = 0; i < 10; ++i)
            if (T(i, j) != 0) acc += Rat(T(i, j)) * c[i];
        s[j] = acc;
    }
    s[0] -= Rat(4 * sgn_l);  // HP^2 signature correction, S-coordinates (4,0,...,0)
    SInvariant out;
    for (std::size_t i = 0; i < 9; ++i) out.s[i] = QmodZ(s[i] / Rat(div.d[i]));
    out.s10 = s[9];
    return out;
}

namespace {

SInvariant s_closed_nl(const Int& m, const Int& n, const Int& l, const Polarization& g) {
    auto [p, q] = bezout_nl(n, l);
    const Int &A = g.A, &B = g.B, &C = g.C, &D = g.D;
    Int n2 = n * n;

    Rat E = rr(p * p * p * p, l) - rr(q * q * q * q * m, n2);
    Rat F = rr(q * q * m * (n2 - 3), n2) + rr(p * p * (l * l + 4), l);
    Rat G = rr(q * (n2 + 3), n);
    Rat H = rr(q * q * q, n);

    SInvariant out;
    out.s[0] = s1(m, n, l);
    out.s[1] = QmodZ(Rat(A * A) * F / 48 - Rat(A * B) * G / 24 - Rat(A * A * A * A) * E / 24 +
                     Rat(A * A * A * B) * H / 6);
    out.s[2] = QmodZ(Rat(A * C) * F / 24 - Rat(A * D + B * C) * G / 24 -
                     Rat(A * C * (2 * A * A - 3 * A * C + 2 * C * C)) * E / 12 +
                     (Rat(A * A * A * D + B * C * C * C) / 6 +
                      Rat(A * C * (A - C) * (B - D)) / 2) *
                         H);
    out.s[3] = QmodZ(Rat(C * C) * F / 48 - Rat(C * D) * G / 24 - Rat(C * C * C * C) * E / 24 +
                     Rat(C * C * C * D) * H / 6);
    out.s[4] = QmodZ(Rat(A * A * A * A) * E / 2 - Rat(2 * A * A * A * B) * H);
    out.s[5] = QmodZ(Rat(A * A * A * C) * E - Rat(A * A * (A * D + 3 * B * C)) * H);
    out.s[6] = QmodZ(Rat(A * A * C * C) * E / 2 - Rat(A * C * (A * D + B * C)) * H);
    out.s[7] = QmodZ(Rat(A * C * C * C) * E - Rat(C * C * (3 * A * D + B * C)) * H);
    out.s[8] = QmodZ(Rat(C * C * C * C) * E / 2 - Rat(2 * C * C * C * D) * H);
    out.s10 = 0;
    return out;
}

SInvariant s_closed_mn(const Int& m, const Int& n, const Int& l, const Polarization& g) {
    auto [u, v] = bezout_mn(m, n);
    const Int &A = g.A, &B = g.B, &C = g.C, &D = g.D;
    Int n2 = n * n;

    Rat P = Rat(u - 3 * u * v * n) - rr(3 * u, n2) - rr(3 * u * v, n);
    Rat Q = rr(l * l + 4, l);
    Rat R = rr(u * u * u, n2) + rr(3 * u * u * u * v, n);

    SInvariant out;
    out.s[0] = s1(m, n, l);
    out.s[1] = QmodZ(Rat(A * A) * P / 48 + Rat(B * B) * Q / 48 + Rat(A * A * A * A) * R / 24 -
                     rr(B * B * B * B, 24 * l));
    out.s[2] = QmodZ(Rat(A * C) * P / 24 + Rat(B * D) * Q / 24 +
                     Rat(2 * A * A * A * C - 3 * A * A * C * C + 2 * A * C * C * C) * R / 12 -
                     rr(2 * B * B * B * D - 3 * B * B * D * D + 2 * B * D * D * D, 12 * l));
    out.s[3] = QmodZ(Rat(C * C) * P / 48 + Rat(D * D) * Q / 48 + Rat(C * C * C * C) * R / 24 -
                     rr(D * D * D * D, 24 * l));
    out.s[4] = QmodZ(-Rat(A * A * A * A) * R / 2 + rr(B * B * B * B, 2 * l));
    out.s[5] = QmodZ(-Rat(A * A * A * C) * R + rr(B * B * B * D, l));
    out.s[6] = QmodZ(-Rat(A * A * C * C) * R / 2 + rr(B * B * D * D, 2 * l));
    out.s[7] = QmodZ(-Rat(A * C * C * C) * R + rr(B * D * D * D, l));
    out.s[8] = QmodZ(-Rat(C * C * C * C) * R / 2 + rr(D * D * D * D, 2 * l));
    out.s10 = 0;
    return out;
}

}  // namespace

SInvariant s_invariant_nl(const Int& m, const Int& n, const Int& l, const Polarization& g) {
    CharNums10 c = monomial_charnums_nl(m, n, l, g);
    SInvariant closed = s_closed_nl(m, n, l, g);
    SInvariant tables = s_from_charnums(c, sign(l));
    if (closed != tables)
        throw internal_error("s_invariant_nl: closed form and table route disagree");
    return closed;
}

SInvariant s_invariant_mn(const Int& m, const Int& n, const Int& l, const Polarization& g) {
    CharNums10 c = monomial_charnums_mn(m, n, l, g);
    SInvariant closed = s_closed_mn(m, n, l, g);
    SInvariant tables = s_from_charnums(c, sign(l));
    if (closed != tables)
        throw internal_error("s_invariant_mn: closed form and table route disagree");
    return closed;
}

QmodZ s1(const Int& m, const Int& n, const Int& l) {
    check_spin_triple(m, n, l);
    Int n2 = n * n;
    Rat v = rr(3 * m * (n2 - 1) * (n2 + 3), 896 * n2) +
            rr((l * l + 4) * (l * l + 4), 896 * l) - rr(sign(l), Int(224));
    return QmodZ(v);
}

IntMat action_matrix(const Polarization& g) {
    require(g.unimodular(), "action_matrix: g must be unimodular");
    const Int &A = g.A, &B = g.B, &C = g.C, &D = g.D;
    IntMat r(8, 8);
    // Quadratic block on (z^2 p1, zw p1, w^2 p1).
    r(0, 0) = A * A;
    r(0, 1) = A * C;
    r(0, 2) = C * C;
    r(1, 0) = 2 * A * B;
    r(1, 1) = A * D + B * C;
    r(1, 2) = 2 * C * D;
    r(2, 0) = B * B;
    r(2, 1) = B * D;
    r(2, 2) = D * D;
    // Quartic block on ((z^2)^2, z^2.zw, z^2.w^2, zw.w^2, (w^2)^2).
    r(3, 3) = A * A * A * A;
    r(3, 4) = A * A * A * C;
    r(3, 5) = A * A * C * C;
    r(3, 6) = A * C * C * C;
    r(3, 7) = C * C * C * C;
    r(4, 3) = 4 * A * A * A * B;
    r(4, 4) = A * A * A * D + 3 * A * A * B * C;
    r(4, 5) = 2 * A * A * C * D + 2 * A * B * C * C;
    r(4, 6) = 3 * A * C * C * D + B * C * C * C;
    r(4, 7) = 4 * C * C * C * D;
    r(5, 3) = 6 * A * A * B * B;
    r(5, 4) = 3 * A * A * B * D + 3 * A * B * B * C;
    r(5, 5) = A * A * D * D + 4 * A * B * C * D + B * B * C * C;
    r(5, 6) = 3 * A * C * D * D + 3 * B * C * C * D;
    r(5, 7) = 6 * C * C * D * D;
    r(6, 3) = 4 * A * B * B * B;
    r(6, 4) = 3 * A * B * B * D + B * B * B * C;
    r(6, 5) = 2 * A * B * D * D + 2 * B * B * C * D;
    r(6, 6) = A * D * D * D + 3 * B * C * D * D;
    r(6, 7) = 4 * C * D * D * D;
    r(7, 3) = B * B * B * B;
    r(7, 4) = B * B * B * D;
    r(7, 5) = B * B * D * D;
    r(7, 6) = B * D * D * D;
    r(7, 7) = D * D * D * D;
    return r;
}

const IntLattice& L0_lattice() {
    static const IntLattice l0 = [] {
        const long rows[8][8] = {
            {4, 0, 0, 2, 0, 0, 0, 0},
            {0, 4, 0, 0, 1, 0, 0, 0},
            {0, -12, 0, 0, 0, 2, 0, 0},
            {0, 4, 0, 0, 0, 0, 1, 0},
            {0, 0, 4, 0, 0, 0, 0, 2},
            {0, 0, 0, 24, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 4, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 24},
        };
        IntMat g(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) g(i, j) = rows[i][j];
        return IntLattice(8, g);
    }();
    return l0;
}

Int f2plus(const Int& n) { return (n * n + n) / 2; }
Int f2minus(const Int& n) { return (n * n - n) / 2; }
Int g2(const Int& m, const Int& n) {
    Int num = m * m * n - m * n * n;
    if (!divides(Int(2), num)) throw internal_error("g2: non-integral value");
    return num / 2;
}
Int f3(const Int& n) {
    Int num = n * n * n - n;
    if (!divides(Int(6), num)) throw internal_error("f3: non-integral value");
    return num / 6;
}
Int f4(const Int& n) {
    Int num = n * n * n * n - n * n;
    if (!divides(Int(12), num)) throw internal_error("f4: non-integral value");
    return num / 12;
}

std::array<Rat, 8> varsigma_vector(const Int& m, const Int& n, const Int& l, const Polarization& g,
                                   SMode mode) {
    CharNums10 c =
        mode == SMode::NL ? monomial_charnums_nl(m, n, l, g) : monomial_charnums_mn(m, n, l, g);
    // Drop p1^2 (index 0) and (xy)^2 (index 7).
    return {c[1], c[2], c[3], c[4], c[5], c[6], c[8], c[9]};
}

Coset varsigma_coset(const Int& m, const Int& n, const Int& l, const Polarization& g, SMode mode) {
    auto v = varsigma_vector(m, n, l, g, mode);
    return Coset{std::vector<Rat>(v.begin(), v.end()), &L0_lattice()};
}

std::array<Rat, 8> act(const std::array<Rat, 8>& v, const Polarization& g) {
    IntMat r = action_matrix(g);
    std::array<Rat, 8> out{};
    for (std::size_t j = 0; j < 8; ++j) {
        Rat acc(0);
        for (std::size_t i = 0; i < 8; ++i)
            if (r(i, j) != 0) acc += v[i] * Rat(r(i, j));
        out[j] = acc;
    }
    return out;
}

}  // namespace circle7
