#pragma once

/**
 * @file classify.hpp
 * @brief Diffeomorphism decision procedures for the manifolds M_{m,n,l}:
 *        the residue-class exponent functions, the per-family criteria, the
 *        reference criterion for circle bundles over CP^1 x CP^2, the
 *        tangential-isomorphism constraint systems and a bounded GL(2,Z)
 *        witness search used for cross-validation.
 *
 * All verdicts are for orientation-preserving diffeomorphism.
 */

#include "circle7/manifold.hpp"
#include "circle7/sinv.hpp"

#include <optional>

namespace circle7 {

int lambda2(const Int& n);        // in {0,1,2,3}, by n mod 8
int lambda7(const Int& n);        // in {0,1}, by n mod 7
int mu3(const Int& n);            // in {0,1}, by n mod 3
int lambda2_tilde(const Int& n);  // in {0,1,2}, by n mod 8

/// 2^lambda2(n) * 7^lambda7(n) * n^2 / 3^mu3(n), the family-M1 modulus.
Int m1_modulus(const Int& n);
/// 2^lambda2(n) * 7^lambda7(n) * n^2, the reference-criterion modulus.
Int ks88_modulus(const Int& n);
/// 2^lambda2(n) * 7^lambda7(n) * (n/3^mu3(n))^2, the modulus equivalent to
/// equality of s1 for spin pairs sharing |n| and l.
Int s1_modulus(const Int& n);

enum class VerdictKind { Diffeomorphic, NotDiffeomorphic, NotHomeomorphic, OutOfScope };
std::string verdict_name(VerdictKind k);

struct Verdict {
    VerdictKind kind;
    std::string reason;
    std::optional<Polarization> witness;
};

/// NotHomeomorphic when the families differ; nullopt when they agree.
std::optional<Verdict> decide_family_pair(const BundleParams& t1, const BundleParams& t2);

/// Complete criterion for family M3 pairs.
Verdict decide_M3(const BundleParams& t1, const BundleParams& t2);
/// Complete criterion for family M2 pairs.
Verdict decide_M2(const BundleParams& t1, const BundleParams& t2);
/// Partial criterion for spin family M1 pairs; OutOfScope outside the proved
/// hypotheses (non-spin input, or both m nonzero without gcd(m,n) = 1).
Verdict decide_M1_spin(const BundleParams& t1, const BundleParams& t2);

/// Full dispatcher: family split, then the family-specific criterion.
Verdict decide(const BundleParams& t1, const BundleParams& t2);

/// Reference criterion for the circle bundles over CP^1 x CP^2.
Verdict ks88_decide(const Int& m, const Int& n, const Int& mbar, const Int& nbar);

/// Necessary condition via s1: true iff s1(t1) = s1(t2). Requires spin M1
/// pairs with nbar = +-n and shared l; cross-checked against the congruence
/// modulo s1_modulus(n).
bool s1_necessary(const BundleParams& t1, const BundleParams& t2);

/// Tangential-isomorphism constraint system on g for the pair, in the basis
/// of the given mode.
bool phi_constraint(const BundleParams& t1, const BundleParams& t2, const Polarization& g,
                    SMode mode);

/// Exhaustive search over unimodular g with entries in [-bound, bound], in
/// ascending lexicographic (A,B,C,D) order, for one passing phi_constraint
/// with s(t1 polarized by g) equal to s(t2, identity). Since g and -g act
/// identically, the returned witness is normalized so its last nonzero entry
/// is positive. Absence of a witness proves nothing.
std::optional<Polarization> oracle_search(const BundleParams& t1, const BundleParams& t2,
                                          int bound);

}  // namespace circle7
