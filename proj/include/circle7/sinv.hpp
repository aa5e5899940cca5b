#pragma once

/**
 * @file sinv.hpp
 * @brief The s-invariant of polarized spin manifolds in family M1: exact
 *        monomial characteristic numbers of the disc-bundle coboundary, the
 *        invariant tuple (s_1..s_9, S_10), the GL(2,Z) action R(g) on the
 *        8-component part and the lattice L0 it preserves.
 *
 * Two independent routes produce the tuple: the closed forms, and the
 * recomputation through the monomial vector, the S-coordinate change and the
 * canonical divisors. s_invariant_* returns the closed forms after checking
 * the two routes agree exactly.
 */

#include "circle7/bordism.hpp"
#include "circle7/lattice.hpp"
#include "circle7/manifold.hpp"

#include <array>

namespace circle7 {

struct hypothesis_error : error {
    using error::error;
};

/// Ordered basis change of H^2: columns of [[A,C],[B,D]] give the new basis
/// (A x + B y, C x + D y) in terms of the reference basis (x, y).
struct Polarization {
    Int A, B, C, D;

    Int det() const { return A * D - B * C; }
    bool unimodular() const { return abs(det()) == 1; }
    static Polarization identity() { return {Int(1), Int(0), Int(0), Int(1)}; }
    Polarization operator*(const Polarization& o) const {
        return {A * o.A + C * o.B, B * o.A + D * o.B, A * o.C + C * o.D, B * o.C + D * o.D};
    }
    bool operator==(const Polarization& o) const {
        return A == o.A && B == o.B && C == o.C && D == o.D;
    }
    std::string str() const {
        return "[[" + A.get_str() + "," + C.get_str() + "],[" + B.get_str() + "," + D.get_str() +
               "]]";
    }
};

/// (s_1,...,s_9, S_10) in (Q/Z)^9 x Q.
struct SInvariant {
    std::array<QmodZ, 9> s;
    Rat s10;

    bool operator==(const SInvariant& o) const { return s == o.s && s10 == o.s10; }
    bool operator!=(const SInvariant& o) const { return !(*this == o); }
};

/// Monomial characteristic numbers of the coboundary, in the se_matrix
/// column order (p1^2, x^2 p1, xy p1, y^2 p1, (x^2)^2, x^2.xy, x^2.y^2,
/// (xy)^2, xy.y^2, (y^2)^2).
using CharNums10 = std::array<Rat, 10>;

/// Coboundary characteristic numbers for the polarization built over the
/// basis (p*z, p*alpha), z = -q beta + p gamma; needs gcd(n,l) = 1 and spin
/// parity.
CharNums10 monomial_charnums_nl(const Int& m, const Int& n, const Int& l, const Polarization& g);

/// Same over the basis (p*z, p*gamma), z = -v alpha + u beta; needs m,n,l
/// nonzero, gcd(m,n) = 1 and spin parity.
CharNums10 monomial_charnums_mn(const Int& m, const Int& n, const Int& l, const Polarization& g);

/// Tuple from a monomial vector: S-coordinates via s_coordinate_change, the
/// sgn(l) HP^2 correction in the first coordinate, then division by the
/// canonical divisors. This is the table route.
SInvariant s_from_charnums(const CharNums10& c, int sgn_l);

/// Closed forms (gcd(n,l) = 1 route); checked against s_from_charnums.
SInvariant s_invariant_nl(const Int& m, const Int& n, const Int& l, const Polarization& g);
/// Closed forms (gcd(m,n) = 1 route); checked against s_from_charnums.
SInvariant s_invariant_mn(const Int& m, const Int& n, const Int& l, const Polarization& g);

/// The polarization-independent first component, defined for every spin
/// triple in M1.
QmodZ s1(const Int& m, const Int& n, const Int& l);

/// The 8x8 right-action matrix on the (z^2 p1, zw p1, w^2 p1, (z^2)^2,
/// z^2.zw, z^2.w^2, zw.w^2, (w^2)^2) coordinates.
IntMat action_matrix(const Polarization& g);

/// The integral lattice L0 in Q^8 preserved by the action.
const IntLattice& L0_lattice();

/// Integer-valued polynomials appearing in the invariance proof.
Int f2plus(const Int& n);
Int f2minus(const Int& n);
Int g2(const Int& m, const Int& n);
Int f3(const Int& n);
Int f4(const Int& n);

enum class SMode { NL, MN };

/// The 8-vector of the coset invariant: monomial vector with the p1^2 and
/// (xy)^2 entries dropped.
std::array<Rat, 8> varsigma_vector(const Int& m, const Int& n, const Int& l, const Polarization& g,
                                   SMode mode);
Coset varsigma_coset(const Int& m, const Int& n, const Int& l, const Polarization& g, SMode mode);

/// Right action of g on an 8-vector.
std::array<Rat, 8> act(const std::array<Rat, 8>& v, const Polarization& g);

}  // namespace circle7
