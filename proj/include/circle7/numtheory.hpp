#pragma once

/**
 * @file numtheory.hpp
 * @brief Exact integer and rational arithmetic primitives.
 *
 * Arbitrary precision is provided by GMP (mpz_class / mpq_class). Everything
 * here is pure and stateless.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circle7 {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_coprime : error {
    using error::error;
};
struct internal_error : error {
    using error::error;
};

inline int sign(const Int& a) { return sgn(a); }

/// Reduced fraction num/den, den != 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Floor of a rational, as an integer.
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

/// Representative of q mod Z in [0,1).
inline Rat mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

/// Element of Q/Z stored as the reduced representative in [0,1).
class QmodZ {
  public:
    QmodZ() : rep_(0) {}
    explicit QmodZ(const Rat& q) : rep_(mod1(q)) {}
    const Rat& rep() const { return rep_; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(rep_ + o.rep_); }
    QmodZ operator-() const { return QmodZ(-rep_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(rep_ - o.rep_); }
    bool operator==(const QmodZ& o) const { return rep_ == o.rep_; }
    bool operator!=(const QmodZ& o) const { return rep_ != o.rep_; }

    std::string str() const { return rep_.get_str(); }

  private:
    Rat rep_;
};

struct ExtGcd {
    Int g, x, y;  // a*x + b*y = g = gcd(a,b) >= 0
};

/// Extended gcd with a deterministic representative: x has minimal absolute
/// value among all valid coefficients, with ties broken towards x > 0.
ExtGcd ext_gcd(const Int& a, const Int& b);

/// Coefficients (p,q) with p*n + q*l = 1 in the canonical normalization:
/// (sgn(n), 0) when |n| = 1, otherwise 0 <= q < |n| with q*l = 1 mod n.
struct BezoutPair {
    Int p, q;
};
BezoutPair bezout_nl(const Int& n, const Int& l);

/// Coefficients (u,v) with u*m + v*n = 1, normalized like bezout_nl:
/// 0 <= u < |n| with u*m = 1 mod n (and (0, sgn(n)) when |n| = 1).
struct BezoutUV {
    Int u, v;
};
BezoutUV bezout_mn(const Int& m, const Int& n);

/// Exponent of the prime p in n (n != 0).
unsigned long padic_valuation(const Int& p, const Int& n);

/// Simultaneous congruence solver. Moduli must be positive. Returns the
/// unique solution r in [0, lcm) when the system is compatible.
struct CrtResult {
    Int r, modulus;
};
std::optional<CrtResult> crt_solve(const std::vector<std::pair<Int, Int>>& congruences);

/// Inverse of a mod m>0, when gcd(a,m)=1; result in [0,m).
Int mod_inverse(const Int& a, const Int& m);

/// a mod m normalized into [0, |m|), m != 0.
inline Int mod_pos(const Int& a, const Int& m) {
    Int r, am = abs(m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }
inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace circle7
