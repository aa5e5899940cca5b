#include "circle7/manifold.hpp"

namespace circle7 {

std::string family_name(Family f) {
    switch (f) {
        case Family::M1: return "M1";
        case Family::M2: return "M2";
        case Family::M3: return "M3";
        case Family::M4: return "M4";
        case Family::M5: return "M5";
    }
    throw internal_error("family_name: bad enum");
}

BundleParams BundleParams::negated() const { return {-m, -n, -l, spin}; }

std::string BundleParams::str() const {
    return "(" + m.get_str() + "," + n.get_str() + "," + l.get_str() + ")";
}

BundleParams validate(const Int& m, const Int& n, const Int& l) {
    Int g = gcd(gcd(m, n), l);
    if (g != 1)
        throw not_simply_connected("validate: gcd(m,n,l) = " + g.get_str() + ", must be 1");
    bool spin = is_even(m) && is_odd(n) && is_even(l);
    return {m, n, l, spin};
}

Family family_of(const BundleParams& p) {
    if (p.n != 0 && p.l != 0) return Family::M1;
    if (p.n != 0) return Family::M2;
    if (p.m != 0 && p.l != 0) return Family::M3;
    if (p.m != 0) return Family::M4;
    return Family::M5;
}

namespace {

BezoutData bezout_data(const BundleParams& p) {
    BezoutData b;
    if (p.m != 0) {
        b.d = gcd(p.m, p.n);
        b.m1 = p.m / b.d;
        b.n1 = p.n / b.d;
        auto uv = bezout_mn(b.m1, b.n1);
        b.u = uv.u;
        b.v = uv.v;
        // (u',v') starts at the same canonical pair; refine to d | u' when
        // gcd(d,n1) = 1 allows it.
        b.up = b.u;
        b.vp = b.v;
        if (gcd(b.d, b.n1) == 1 && b.d != 1) {
            Int lambda = mod_pos(-b.u * mod_inverse(mod_pos(b.n1, b.d), b.d), b.d);
            b.up = b.u + lambda * b.n1;
            b.vp = b.v - lambda * b.m1;
            b.up_refined = true;
        } else if (b.d == 1) {
            b.up_refined = true;  // trivially d | u' is free; keep (u,v)
        }
        if (p.l != 0) {
            auto st = bezout_nl(b.d, p.l);  // gcd(d,l) = 1 since gcd(m,n,l)=1
            b.s = st.p;
            b.t = st.q;
        }
    }
    if (p.n != 0 && p.l != 0 && gcd(p.n, p.l) == 1) {
        auto pq = bezout_nl(p.n, p.l);
        b.p = pq.p;
        b.q = pq.q;
    }
    return b;
}

Int lcm_pos(const Int& a, const Int& b) { return lcm(abs(a), abs(b)); }

}  // namespace

H4Structure h4_structure(const BundleParams& p) {
    H4Structure h;
    switch (family_of(p)) {
        case Family::M1: {
            h.rank = 0;
            h.torsion_order = p.n * p.n * abs(p.l);
            if (p.m == 0) {
                h.exponent = abs(p.n * p.l);
                h.cyclic = {{"(p*alpha)(p*z)", abs(p.n)}, {"(p*z)^2", abs(p.n * p.l)}};
            } else {
                BezoutData b = bezout_data(p);
                h.exponent = b.d * lcm_pos(b.n1 * b.n1, p.l);
                if (b.d == 1) {
                    h.cyclic = {{"(p*z)^2", p.n * p.n}, {"(p*gamma)^2", abs(p.l)}};
                } else {
                    h.cyclic = {{"p*omega", b.d},
                                {"p*rho", b.d * b.n1 * b.n1},
                                {"(p*gamma)^2", abs(p.l)}};
                }
            }
            break;
        }
        case Family::M2:
            h.rank = 1;
            h.torsion_order = p.n * p.n;
            h.exponent = p.n * p.n;
            h.cyclic = {{"(p*z)^2", p.n * p.n}, {"(p*gamma)^2", 0}};
            break;
        case Family::M3:
            h.rank = 1;
            h.torsion_order = abs(p.m * p.l);
            h.exponent = lcm_pos(p.m, p.l);
            h.cyclic = {{"(p*beta)^2", 0}, {"(p*beta)(p*z)", abs(p.m)}, {"(p*z)^2", abs(p.l)}};
            break;
        case Family::M4:
            h.rank = 2;
            h.torsion_order = 1;
            h.exponent = 1;
            h.cyclic = {{"(p*beta)^2", 0}, {"(p*gamma)^2", 0}};
            break;
        case Family::M5:
            h.rank = 2;
            h.torsion_order = 1;
            h.exponent = 1;
            h.cyclic = {{"(p*alpha)(p*beta)", 0}, {"(p*beta)^2", 0}};
            break;
    }
    // Trivial cyclic factors carry no information.
    std::erase_if(h.cyclic, [](const auto& f) { return f.second == 1; });
    return h;
}

CohPresentation char_classes_stmt(const BundleParams& p, int statement) {
    if (family_of(p) != Family::M1)
        throw presentation_unavailable("char_classes: presentations exist for family M1 only");
    CohPresentation c;
    c.family = Family::M1;
    c.statement = statement;
    c.aux = bezout_data(p);
    const BezoutData& b = c.aux;
    switch (statement) {
        case 1: {
            if (p.m != 0) throw presentation_unavailable("statement 1 needs m = 0");
            c.basis = {"p*z", "p*alpha"};
            c.h4_gens = {{"(p*alpha)(p*z)", abs(p.n)}, {"(p*z)^2", abs(p.n * p.l)}};
            c.w2 = {mod_pos(p.l, Int(2)), Int(0)};  // rho2(l p*z)
            c.p1 = {Int(0), 3 * p.l * p.l + 4 * p.n * p.n};
            break;
        }
        case 2: {
            if (p.m == 0) throw presentation_unavailable("statement 2 needs m != 0");
            c.basis = {"p*f", "p*g"};
            c.h4_gens = {{"p*omega", b.d},
                         {"p*rho", b.d * b.n1 * b.n1},
                         {"(p*gamma)^2", abs(p.l)}};
            // rho here is built from the plain pair (u,v); see header notes.
            c.w2 = {mod_pos(b.m1, Int(2)), mod_pos(p.l * b.v, Int(2))};  // rho2(m1 f - lv g)
            c.p1 = {3 * b.v, 3 * b.m1, Int(4)};
            c.p1_products = {3 * b.m1 * b.m1, -6 * b.v * b.m1 * p.l,
                             3 * b.v * b.v * p.l * p.l + 4 * b.d * b.d};
            break;
        }
        case 3: {
            if (p.m == 0 || gcd(p.n, p.l) != 1)
                throw presentation_unavailable("statement 3 needs m != 0 and gcd(n,l) = 1");
            c.basis = {"p*z", "p*alpha"};
            c.h4_gens = {{"p*omega", b.d},
                         {"p*rho", b.d * b.n1 * b.n1},
                         {"(p*gamma)^2", abs(p.l)}};
            // rho2(-l p*z - p m1 d p*alpha)
            c.w2 = {mod_pos(p.l, Int(2)), mod_pos(b.p * b.m1 * b.d, Int(2))};
            c.p1 = {3 * b.vp, 3 * b.m1, Int(4)};
            c.p1_products = {3 * p.l * p.l + 4 * b.n1 * b.n1 * b.d * b.d,
                             6 * b.p * b.m1 * b.d * p.l - 8 * b.q * b.m1 * b.n1 * b.d * b.d};
            break;
        }
        case 4: {
            if (p.m == 0 || gcd(p.m, p.n) != 1)
                throw presentation_unavailable("statement 4 needs gcd(m,n) = 1 and m != 0");
            c.basis = {"p*z", "p*gamma"};
            c.h4_gens = {{"(p*z)^2", p.n * p.n}, {"(p*gamma)^2", abs(p.l)}};
            c.w2 = {mod_pos(p.m, Int(2)), mod_pos(b.v * p.l, Int(2))};  // rho2(m z - vl gamma)
            c.p1 = {3 * p.m * p.m, Int(4)};
            break;
        }
        default:
            throw error("char_classes_stmt: statement must be 1..4");
    }
    return c;
}

CohPresentation char_classes(const BundleParams& p) {
    if (p.m == 0) return char_classes_stmt(p, 1);
    if (gcd(p.m, p.n) == 1) return char_classes_stmt(p, 4);
    if (gcd(p.n, p.l) == 1) return char_classes_stmt(p, 3);
    return char_classes_stmt(p, 2);
}

int signature_sym(const RatMat& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw dimension_mismatch("signature_sym: matrix not square");
    RatMat a = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) throw error("signature_sym: matrix not symmetric");

    int pos = 0, neg = 0;
    // Symmetric (congruence) reduction over Q.
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            // Look for a later diagonal entry to swap in.
            std::size_t d = k + 1;
            while (d < n && a(d, d) == 0) ++d;
            if (d < n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(d, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, d));
            } else {
                // All remaining diagonals vanish; use an off-diagonal entry.
                std::size_t oi = k, oj = k;
                bool found = false;
                for (std::size_t i = k; i < n && !found; ++i)
                    for (std::size_t j = i + 1; j < n && !found; ++j)
                        if (a(i, j) != 0) {
                            oi = i;
                            oj = j;
                            found = true;
                        }
                if (!found) break;  // zero block
                // row/col oi += row/col oj makes the (oi,oi) entry 2*a(oi,oj).
                for (std::size_t j = 0; j < n; ++j) a(oi, j) += a(oj, j);
                for (std::size_t i = 0; i < n; ++i) a(i, oi) += a(i, oj);
                if (oi != k) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(oi, j));
                    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, oi));
                }
            }
        }
        if (a(k, k) == 0) continue;
        if (a(k, k) > 0) ++pos;
        else ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, k);
        }
    }
    return pos - neg;
}

int disc_signature(const BundleParams& p) {
    int s = sign(p.l);
    if (p.n != 0) {
        RatMat m(3, 3);
        m(0, 1) = m(1, 0) = Rat(p.n);
        m(1, 1) = Rat(p.m);
        m(2, 2) = Rat(p.l);
        if (signature_sym(m) != s)
            throw internal_error("disc_signature: cross-check against 3x3 form failed");
    }
    return s;
}

}  // namespace circle7
