#include "circle7/numtheory.hpp"

namespace circle7 {

ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw error("ext_gcd: both arguments zero");
    if (b == 0) return {abs(a), Int(sign(a)), Int(0)};
    if (a == 0) return {abs(b), Int(0), Int(sign(b))};

    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());

    // Normalize: x minimal in absolute value, ties towards x > 0.
    Int step = abs(b) / g;
    Int x0 = mod_pos(x, step);  // in [0, step)
    Int x1 = x0 - step;         // in [-step, 0)
    x = (abs(x1) < abs(x0)) ? x1 : x0;
    y = (g - a * x) / b;
    return {g, x, y};
}

BezoutPair bezout_nl(const Int& n, const Int& l) {
    if (n == 0 || l == 0) throw error("bezout_nl: arguments must be nonzero");
    Int g = gcd(n, l);
    if (g != 1) throw not_coprime("bezout_nl: gcd(" + n.get_str() + "," + l.get_str() + ") != 1");
    if (abs(n) == 1) return {Int(sign(n)), Int(0)};
    Int q = mod_inverse(l, abs(n));  // q*l = 1 mod n, 0 <= q < |n|
    Int p = (1 - q * l) / n;
    return {p, q};
}

BezoutUV bezout_mn(const Int& m, const Int& n) {
    BezoutPair pq = bezout_nl(n, m);  // p*n + q*m = 1, 0 <= q < |n|
    return {pq.q, pq.p};
}

unsigned long padic_valuation(const Int& p, const Int& n) {
    if (n == 0) throw error("padic_valuation: n must be nonzero");
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0)
        throw error("padic_valuation: p must be prime");
    Int r = abs(n);
    unsigned long a = 0;
    while (divides(p, r)) {
        r /= p;
        ++a;
    }
    return a;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m <= 0) throw error("mod_inverse: modulus must be positive");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw not_coprime("mod_inverse: argument not invertible");
    return inv;
}

std::optional<CrtResult> crt_solve(const std::vector<std::pair<Int, Int>>& congruences) {
    Int r = 0, M = 1;
    for (const auto& [ri, mi] : congruences) {
        if (mi <= 0) throw error("crt_solve: moduli must be positive");
        // Merge r mod M with ri mod mi.
        Int g = gcd(M, mi);
        Int diff = ri - r;
        if (!divides(g, diff)) return std::nullopt;
        Int M1 = M / g, m1 = mi / g;
        Int k = mod_pos((diff / g) * mod_inverse(mod_pos(M1, m1), m1), m1);
        Int Mnew = M * m1;  // lcm(M, mi)
        r = mod_pos(r + M * k, Mnew);
        M = Mnew;
    }
    return CrtResult{r, M};
}

}  // namespace circle7
