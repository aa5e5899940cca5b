#include "circle7/ricci.hpp"

namespace circle7 {

Rat s_metric(const Int& m, const Int& n, const Int& l) {
    BundleParams t = validate(m, n, l);
    if (family_of(t) != Family::M1 || !t.spin)
        throw hypothesis_error("s_metric: needs a spin triple in family M1");
    Int n2 = n * n;
    return -make_rat(3 * m * (n2 + 3) * (n2 - 1), 896 * n2) -
           make_rat((l * l + 4) * (l * l + 4), 896 * l) + make_rat(sign(l), Int(224));
}

Int delta0(const Int& n) {
    if (n == 0 || is_even(n)) throw hypothesis_error("delta0: n must be odd and nonzero");
    return m1_modulus(n);
}

MetricFamilyReport ricci_family(const Int& n, const Int& l, const Int& m0, int count,
                                bool allow_sign_mixed) {
    if (is_even(n) || n < 3) throw hypothesis_error("ricci_family: n must be odd and >= 3");
    if (is_odd(l) || l <= 0) throw hypothesis_error("ricci_family: l must be even and > 0");
    if (is_odd(m0)) throw hypothesis_error("ricci_family: m0 must be even");
    if (gcd(gcd(m0, n), l) != 1) throw hypothesis_error("ricci_family: gcd(m0,n,l) must be 1");
    // The per-entry diffeomorphism certificates come from the m != 0 case of
    // the M1 classification, which needs this; delta0(n) = 0 mod n keeps it
    // true along the whole family. m0 = 0 falls under the one-m-zero case.
    if (m0 != 0 && gcd(m0, n) != 1)
        throw hypothesis_error("ricci_family: gcd(m0,n) must be 1 when m0 != 0");
    if (count < 1) throw hypothesis_error("ricci_family: count must be >= 1");
    Int n2 = n * n;
    Rat lower = make_rat(n2 * ((l * l + 4) * (l * l + 4) - 4 * l),
                         3 * (n2 + 3) * (n2 - 1) * l);
    if (!allow_sign_mixed && !(Rat(m0) > lower))
        throw hypothesis_error("ricci_family: m0 must exceed " + lower.get_str() +
                               " so every s-value is negative");

    MetricFamilyReport rep{n, l, m0, delta0(n), {}};
    BundleParams base = validate(m0, n, l);
    for (int k = 0; k < count; ++k) {
        Int mk = m0 + k * rep.step;
        if (gcd(gcd(mk, n), l) != 1)
            throw internal_error("ricci_family: entry " + std::to_string(k) +
                                 " lost simple connectivity");
        BundleParams tk = validate(mk, n, l);
        Verdict v = decide_M1_spin(base, tk);
        if (v.kind != VerdictKind::Diffeomorphic)
            throw internal_error("ricci_family: entry " + std::to_string(k) +
                                 " is not diffeomorphic to the base");
        rep.entries.push_back({mk, s_metric(mk, n, l), v.kind});
    }
    for (std::size_t k = 0; k < rep.entries.size(); ++k) {
        const Rat& s = rep.entries[k].s_value;
        if (!allow_sign_mixed && !(s < 0))
            throw internal_error("ricci_family: s-value not negative at entry " +
                                 std::to_string(k));
        if (k > 0 && !(s < rep.entries[k - 1].s_value))
            throw internal_error("ricci_family: s-values not strictly decreasing");
    }
    return rep;
}

}  // namespace circle7
