#include "circle7/classify.hpp"

namespace circle7 {

namespace {

long residue(const Int& n, long mod) { return mod_pos(n, Int(mod)).get_si(); }

void require_h(bool cond, const char* msg) {
    if (!cond) throw hypothesis_error(msg);
}

bool congruent(const Int& a, const Int& b, const Int& mod) { return divides(mod, a - b); }

}  // namespace

int lambda2(const Int& n) {
    require_h(n != 0, "lambda2: n must be nonzero");
    switch (residue(n, 8)) {
        case 2: case 6: return 0;
        case 1: case 7: return 1;
        case 3: case 5: return 2;
        default: return 3;  // 0, 4
    }
}

int lambda7(const Int& n) {
    require_h(n != 0, "lambda7: n must be nonzero");
    switch (residue(n, 7)) {
        case 1: case 2: case 5: case 6: return 0;
        default: return 1;  // 0, 3, 4
    }
}

int mu3(const Int& n) {
    require_h(n != 0, "mu3: n must be nonzero");
    return residue(n, 3) == 0 ? 1 : 0;
}

int lambda2_tilde(const Int& n) {
    require_h(n != 0, "lambda2_tilde: n must be nonzero");
    switch (residue(n, 8)) {
        case 2: case 6: return 0;
        case 1: case 7: return 1;
        default: return 2;  // 0, 3, 4, 5
    }
}

Int m1_modulus(const Int& n) {
    Int mod = pow_int(Int(2), lambda2(n)) * pow_int(Int(7), lambda7(n)) * n * n;
    if (mu3(n) == 1) mod /= 3;
    return mod;
}

Int ks88_modulus(const Int& n) {
    return pow_int(Int(2), lambda2(n)) * pow_int(Int(7), lambda7(n)) * n * n;
}

Int s1_modulus(const Int& n) {
    Int core = abs(n);
    if (mu3(n) == 1) core /= 3;
    return pow_int(Int(2), lambda2(n)) * pow_int(Int(7), lambda7(n)) * core * core;
}

std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Diffeomorphic: return "Diffeomorphic";
        case VerdictKind::NotDiffeomorphic: return "NotDiffeomorphic";
        case VerdictKind::NotHomeomorphic: return "NotHomeomorphic";
        case VerdictKind::OutOfScope: return "OutOfScope";
    }
    throw internal_error("verdict_name: bad enum");
}

std::optional<Verdict> decide_family_pair(const BundleParams& t1, const BundleParams& t2) {
    Family f1 = family_of(t1), f2 = family_of(t2);
    if (f1 == f2) return std::nullopt;
    return Verdict{VerdictKind::NotHomeomorphic,
                   "families differ: " + family_name(f1) + " vs " + family_name(f2), {}};
}

Verdict decide_M3(const BundleParams& t1, const BundleParams& t2) {
    require_h(family_of(t1) == Family::M3 && family_of(t2) == Family::M3,
              "decide_M3: both triples must lie in family M3");
    const Int &m = t1.m, &l = t1.l, &mb = t2.m, &lb = t2.l;
    bool big_m = abs(m) >= 3, big_l = abs(l) >= 3;
    bool ok, m_free = !big_m, l_free = !big_l;
    ok = (m_free ? abs(mb) == abs(m) : mb == m) && (l_free ? abs(lb) == abs(l) : lb == l);
    std::string reason = "M3 criterion: m " + std::string(m_free ? "up to sign" : "exactly") +
                         ", l " + std::string(l_free ? "up to sign" : "exactly");
    return {ok ? VerdictKind::Diffeomorphic : VerdictKind::NotDiffeomorphic, reason, {}};
}

Verdict decide_M2(const BundleParams& t1, const BundleParams& t2) {
    require_h(family_of(t1) == Family::M2 && family_of(t2) == Family::M2,
              "decide_M2: both triples must lie in family M2");
    Int mod = pow_int(Int(2), lambda2_tilde(t1.n)) * t1.n * t1.n;
    bool ok = abs(t2.n) == abs(t1.n) && congruent(t2.m, t1.m, mod);
    return {ok ? VerdictKind::Diffeomorphic : VerdictKind::NotDiffeomorphic,
            "M2 criterion: nbar = +-n and mbar = m mod " + mod.get_str(), {}};
}

Verdict decide_M1_spin(const BundleParams& t1, const BundleParams& t2) {
    if (family_of(t1) != Family::M1 || family_of(t2) != Family::M1)
        return {VerdictKind::OutOfScope, "M1 criterion needs both triples in family M1", {}};
    if (!t1.spin || !t2.spin)
        return {VerdictKind::OutOfScope, "M1 criterion is proved for spin manifolds only", {}};
    if (t1 == t2) return {VerdictKind::Diffeomorphic, "identical triples", {}};

    bool same_nl = abs(t2.n) == abs(t1.n) && t2.l == t1.l;
    if (t1.m == 0 && t2.m == 0) {
        return {same_nl ? VerdictKind::Diffeomorphic : VerdictKind::NotDiffeomorphic,
                "M1 spin case 1 (m = mbar = 0): nbar = +-n and lbar = l", {}};
    }
    if (t1.m == 0 || t2.m == 0) {
        const BundleParams& nonzero = t1.m == 0 ? t2 : t1;
        Int mod = m1_modulus(nonzero.n);
        bool ok = same_nl && divides(mod, nonzero.m);
        return {ok ? VerdictKind::Diffeomorphic : VerdictKind::NotDiffeomorphic,
                "M1 spin case 2 (one m zero): nbar = +-n, lbar = l, m = 0 mod " + mod.get_str(),
                {}};
    }
    if (gcd(t1.m, t1.n) != 1 || gcd(t2.m, t2.n) != 1)
        return {VerdictKind::OutOfScope,
                "M1 spin case 3 needs gcd(m,n) = gcd(mbar,nbar) = 1", {}};
    Int mod = m1_modulus(t1.n);
    bool ok = same_nl && congruent(t2.m, t1.m, mod);
    return {ok ? VerdictKind::Diffeomorphic : VerdictKind::NotDiffeomorphic,
            "M1 spin case 3: nbar = +-n, lbar = l, mbar = m mod " + mod.get_str(), {}};
}

Verdict decide(const BundleParams& t1, const BundleParams& t2) {
    if (auto v = decide_family_pair(t1, t2)) return *v;
    switch (family_of(t1)) {
        case Family::M1: return decide_M1_spin(t1, t2);
        case Family::M2: return decide_M2(t1, t2);
        case Family::M3: return decide_M3(t1, t2);
        case Family::M4:
        case Family::M5:
            // Single class; the two members differ by an orientation-reversing
            // diffeomorphism.
            return {VerdictKind::Diffeomorphic,
                    t1 == t2 ? "identical triples"
                             : "single class in " + family_name(family_of(t1)) +
                                   " (orientation disregarded)",
                    {}};
    }
    throw internal_error("decide: bad family");
}

Verdict ks88_decide(const Int& m, const Int& n, const Int& mbar, const Int& nbar) {
    require_h(n != 0 && nbar != 0, "ks88_decide: n, nbar must be nonzero");
    Int mod = ks88_modulus(n);
    bool ok = abs(nbar) == abs(n) && congruent(mbar, m, mod);
    return {ok ? VerdictKind::Diffeomorphic : VerdictKind::NotDiffeomorphic,
            "reference criterion: nbar = +-n and mbar = m mod " + mod.get_str(), {}};
}

bool s1_necessary(const BundleParams& t1, const BundleParams& t2) {
    require_h(family_of(t1) == Family::M1 && family_of(t2) == Family::M1,
              "s1_necessary: spin M1 pairs only");
    require_h(t1.spin && t2.spin, "s1_necessary: spin M1 pairs only");
    require_h(abs(t1.n) == abs(t2.n) && t1.l == t2.l,
              "s1_necessary: needs nbar = +-n and shared l");
    bool equal = s1(t1.m, t1.n, t1.l) == s1(t2.m, t2.n, t2.l);
    bool cong = congruent(t2.m, t1.m, s1_modulus(t1.n));
    if (equal != cong)
        throw internal_error("s1_necessary: s1 equality and congruence disagree");
    return equal;
}

bool phi_constraint(const BundleParams& t1, const BundleParams& t2, const Polarization& g,
                    SMode mode) {
    require_h(family_of(t1) == Family::M1 && family_of(t2) == Family::M1 && t1.spin && t2.spin,
              "phi_constraint: spin M1 pairs only");
    require_h(g.unimodular(), "phi_constraint: g must be unimodular");
    const Int &A = g.A, &B = g.B, &C = g.C, &D = g.D;
    const Int &n = t1.n, &l = t1.l;
    Int an = abs(n), al = abs(l);
    if (mode == SMode::NL) {
        require_h(gcd(n, l) == 1 && gcd(t2.n, t2.l) == 1,
                  "phi_constraint (nl): needs gcd(n,l) = 1 on both triples");
        return divides(an, C) && gcd(n, A) == 1 && gcd(n, D) == 1 &&
               divides(an, 3 * (A * A - 1)) && divides(an, 3 * B) &&
               divides(an, 3 * (D * D - 1)) && divides(al, C) && gcd(l, A) == 1 &&
               gcd(l, D) == 1 && divides(al, 4 * (A * A - 1)) && divides(al, 4 * (D * D - 1));
    }
    require_h(t1.m != 0 && t2.m != 0 && gcd(t1.m, t1.n) == 1 && gcd(t2.m, t2.n) == 1,
              "phi_constraint (mn): needs m, mbar nonzero and gcd(m,n) = gcd(mbar,nbar) = 1");
    Int n2 = n * n;
    const Int &m = t1.m, &mb = t2.m;
    return divides(n2, C) && gcd(n2, A) == 1 && gcd(n2, D) == 1 &&
           divides(n2, 3 * D * D * m * m - 3 * mb * mb) &&
           divides(n2, 3 * A * A * mb * mb - 3 * m * m) && divides(al, B) && gcd(l, A) == 1 &&
           gcd(l, D) == 1 && divides(al, 4 * D * D - 4) && divides(al, 4 * A * A - 4);
}

std::optional<Polarization> oracle_search(const BundleParams& t1, const BundleParams& t2,
                                          int bound) {
    require_h(family_of(t1) == Family::M1 && family_of(t2) == Family::M1 && t1.spin && t2.spin,
              "oracle_search: spin M1 pairs only");
    // Pick the lemma whose hypotheses both triples satisfy, preferring the
    // gcd(n,l) = 1 route.
    SMode mode;
    if (gcd(t1.n, t1.l) == 1 && gcd(t2.n, t2.l) == 1) {
        mode = SMode::NL;
    } else if (t1.m != 0 && t2.m != 0 && gcd(t1.m, t1.n) == 1 && gcd(t2.m, t2.n) == 1) {
        mode = SMode::MN;
    } else {
        throw hypothesis_error("oracle_search: no computation route covers this pair");
    }
    SInvariant target = mode == SMode::NL
                            ? s_invariant_nl(t2.m, t2.n, t2.l, Polarization::identity())
                            : s_invariant_mn(t2.m, t2.n, t2.l, Polarization::identity());
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d) {
                    Polarization g{Int(a), Int(b), Int(c), Int(d)};
                    if (!g.unimodular()) continue;
                    if (!phi_constraint(t1, t2, g, mode)) continue;
                    SInvariant s = mode == SMode::NL ? s_invariant_nl(t1.m, t1.n, t1.l, g)
                                                     : s_invariant_mn(t1.m, t1.n, t1.l, g);
                    if (s != target) continue;
                    // g and -g act identically on every invariant; report the
                    // representative whose last nonzero entry is positive.
                    Int last = g.D != 0 ? g.D : g.C != 0 ? g.C : g.B != 0 ? g.B : g.A;
                    if (last < 0) g = {-g.A, -g.B, -g.C, -g.D};
                    return g;
                }
    return std::nullopt;
}

}  // namespace circle7
