#pragma once

/**
 * @file manifold.hpp
 * @brief Bundle parameters of the circle bundles M_{m,n,l} over
 *        (CP^1 x CP^2) # CP^3: validation, the five-family split, fourth
 *        cohomology, characteristic-class presentations and signatures.
 */

#include "circle7/lattice.hpp"
#include "circle7/numtheory.hpp"

#include <array>
#include <string>
#include <vector>

namespace circle7 {

struct not_simply_connected : error {
    using error::error;
};
struct presentation_unavailable : error {
    using error::error;
};

enum class Family { M1, M2, M3, M4, M5 };
std::string family_name(Family f);

struct BundleParams {
    Int m, n, l;
    bool spin;  // (m,n,l) == (0,1,0) mod 2

    bool operator==(const BundleParams& o) const { return m == o.m && n == o.n && l == o.l; }
    BundleParams negated() const;
    std::string str() const;
};

/// Checks simple connectivity (gcd(m,n,l) = 1) and computes the spin flag.
BundleParams validate(const Int& m, const Int& n, const Int& l);

Family family_of(const BundleParams& p);

/// Fourth cohomology: rank plus the cyclic torsion factors, in the order the
/// presentation produces them. Order 0 marks an infinite cyclic factor.
struct H4Structure {
    int rank;
    Int torsion_order;
    Int exponent;  // of the torsion part; 1 when torsion-free
    std::vector<std::pair<std::string, Int>> cyclic;  // (generator label, order)
};
H4Structure h4_structure(const BundleParams& p);

/// Auxiliary Bezout data shared by the cohomology presentations. Fields not
/// used by a presentation are left at 0.
struct BezoutData {
    Int d, m1, n1;   // d = gcd(m,n), m = d*m1, n = d*n1
    Int u, v;        // u*m1 + v*n1 = 1
    Int up, vp;      // u'*m1 + v'*n1 = 1 (refined so d | u' when possible)
    Int s, t;        // s*d + t*l = 1
    Int p, q;        // p*n + q*l = 1
    bool up_refined = false;
};

/// One of the closed-form cohomology presentations for manifolds in M1.
/// statement: 1 (m=0), 2 (m!=0, general), 3 (m!=0, gcd(n,l)=1), 4 (gcd(m,n)=1).
/// The torsion generator rho depends on a Bezout pair for (m1,n1): statement 2
/// uses the plain canonical pair (u,v); statement 3 uses (up,vp), which is
/// adjusted so d | up whenever gcd(d,n1) = 1 (aux.up_refined records this).
struct CohPresentation {
    Family family;
    int statement;
    std::array<std::string, 2> basis;                  // H^2 basis labels
    std::vector<std::pair<std::string, Int>> h4_gens;  // (label, order)
    std::array<Int, 2> w2;                             // mod-2 coefficients over basis
    std::vector<Int> p1;                               // over h4_gens
    /// p1 over pairwise products of the basis, when the statement gives one
    /// (statement 2: f^2, fg, g^2; statement 3: z^2, z*alpha; else empty).
    std::vector<Int> p1_products;
    BezoutData aux;
};

/// Most refined presentation available for the triple (family M1 only).
CohPresentation char_classes(const BundleParams& p);
/// Specific statement, throws presentation_unavailable when hypotheses fail.
CohPresentation char_classes_stmt(const BundleParams& p, int statement);

/// Exact signature of a symmetric rational matrix by congruence reduction.
int signature_sym(const RatMat& m);

/// Signature of the coboundary pairing, sgn(l); cross-checked against the
/// explicit 3x3 symmetric matrix whenever n != 0.
int disc_signature(const BundleParams& p);

}  // namespace circle7
