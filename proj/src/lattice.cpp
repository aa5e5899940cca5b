#include "circle7/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace circle7 {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw dimension_mismatch("IntMat multiply: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

void IntMat::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += c * (*this)(r, j);
}

std::vector<Int> IntMat::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t c = 0; c < cols_; ++c) r[c] = (*this)(i, c);
    return r;
}

bool IntMat::row_is_zero(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(i, c) != 0) return false;
    return true;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw dimension_mismatch("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMat m = *this;
    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign_flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            ++sign_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    Int d = m(n - 1, n - 1);
    return (sign_flips % 2) ? Int(-d) : d;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    return os.str();
}

IntMat hnf(const IntMat& m) {
    IntMat h = m;
    std::size_t rows = h.rows(), cols = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Clear column c below row r with unimodular row operations.
        std::size_t piv = r;
        while (piv < rows && h(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        h.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            // Euclidean loop: |h(i,c)| strictly decreases until it hits zero.
            while (h(i, c) != 0) {
                Int q = h(r, c) / h(i, c);  // truncated division
                h.add_row_multiple(r, i, -q);
                h.swap_rows(r, i);
            }
        }
        if (h(r, c) < 0) h.negate_row(r);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            h.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return h;
}

namespace {

// Clear work(i,t) for i > t via unimodular row ops mirrored into u.
void snf_clear_col(IntMat& w, IntMat& u, std::size_t t) {
    std::size_t rows = w.rows();
    for (std::size_t i = t + 1; i < rows; ++i) {
        while (w(i, t) != 0) {
            if (w(t, t) == 0) {
                w.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            Int q = w(i, t) / w(t, t);
            w.add_row_multiple(i, t, -q);
            u.add_row_multiple(i, t, -q);
            if (w(i, t) != 0) {
                w.swap_rows(t, i);
                u.swap_rows(t, i);
            }
        }
    }
}

void snf_clear_row(IntMat& w, IntMat& v, std::size_t t) {
    std::size_t cols = w.cols();
    for (std::size_t j = t + 1; j < cols; ++j) {
        while (w(t, j) != 0) {
            if (w(t, t) == 0) {
                w.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            Int q = w(t, j) / w(t, t);
            w.add_col_multiple(j, t, -q);
            v.add_col_multiple(j, t, -q);
            if (w(t, j) != 0) {
                w.swap_cols(t, j);
                v.swap_cols(t, j);
            }
        }
    }
}

bool snf_row_clear_p(const IntMat& w, std::size_t t) {
    for (std::size_t j = t + 1; j < w.cols(); ++j)
        if (w(t, j) != 0) return false;
    return true;
}

bool snf_col_clear_p(const IntMat& w, std::size_t t) {
    for (std::size_t i = t + 1; i < w.rows(); ++i)
        if (w(i, t) != 0) return false;
    return true;
}

}  // namespace

Snf snf(const IntMat& m) {
    IntMat w = m;
    std::size_t rows = w.rows(), cols = w.cols();
    IntMat u = IntMat::identity(rows), v = IntMat::identity(cols);
    std::size_t t = 0;
    std::size_t mn = std::min(rows, cols);
    for (; t < mn; ++t) {
        // Find a nonzero pivot in the trailing submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (w(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        w.swap_rows(t, pi);
        u.swap_rows(t, pi);
        w.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            snf_clear_col(w, u, t);
            snf_clear_row(w, v, t);
            if (!snf_col_clear_p(w, t) || !snf_row_clear_p(w, t)) continue;
            // Enforce divisibility of the trailing block by w(t,t).
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (!divides(w(t, t), w(i, j))) {
                        w.add_row_multiple(t, i, Int(1));
                        u.add_row_multiple(t, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w(t, t) < 0) {
            w.negate_row(t);
            u.negate_row(t);
        }
    }
    return {w, u, v};
}

IntLattice::IntLattice(std::size_t ambient_dim, IntMat gens, Int den)
    : dim_(ambient_dim), gens_(std::move(gens)), den_(std::move(den)), hnf_(0, 0) {
    if (gens_.cols() != dim_) throw dimension_mismatch("IntLattice: generator width != ambient dim");
    if (den_ <= 0) throw error("IntLattice: denominator must be positive");
    hnf_ = hnf(gens_);
}

bool IntLattice::contains(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw dimension_mismatch("IntLattice::contains: dimension mismatch");
    std::vector<Int> r = v;
    std::size_t row = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (row < hnf_.rows() && hnf_(row, c) != 0) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), r[c].get_mpz_t(), hnf_(row, c).get_mpz_t());
            for (std::size_t k = c; k < dim_; ++k) r[k] -= q * hnf_(row, k);
            ++row;
        }
        if (r[c] != 0) return false;
    }
    return true;
}

bool IntLattice::contains(const std::vector<Rat>& v) const {
    if (v.size() != dim_) throw dimension_mismatch("IntLattice::contains: dimension mismatch");
    std::vector<Int> scaled(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Rat s = v[i] * Rat(den_);
        if (s.get_den() != 1) return false;  // not even in (1/den) Z^k
        scaled[i] = s.get_num();
    }
    return contains(scaled);
}

IntLattice IntLattice::transformed(const IntMat& m) const {
    return IntLattice(m.cols(), gens_ * m, den_);
}

namespace {

// Nonzero rows of the HNF, as a matrix (zero rows sit at the bottom).
IntMat nonzero_rows(const IntMat& h) {
    std::size_t n = h.rows();
    while (n > 0 && h.row_is_zero(n - 1)) --n;
    IntMat out(n, h.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
    return out;
}

}  // namespace

bool lattice_eq(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw dimension_mismatch("lattice_eq: dimension mismatch");
    // Rescale to the common denominator, then compare canonical forms.
    IntMat ga = a.generators(), gb = b.generators();
    Int g = gcd(a.denominator(), b.denominator());
    Int ka = b.denominator() / g, kb = a.denominator() / g;
    for (std::size_t i = 0; i < ga.rows(); ++i)
        for (std::size_t j = 0; j < ga.cols(); ++j) ga(i, j) *= ka;
    for (std::size_t i = 0; i < gb.rows(); ++i)
        for (std::size_t j = 0; j < gb.cols(); ++j) gb(i, j) *= kb;
    return nonzero_rows(hnf(ga)) == nonzero_rows(hnf(gb));
}

bool coset_eq(const IntLattice& l, const std::vector<Rat>& v, const std::vector<Rat>& w) {
    if (v.size() != w.size()) throw dimension_mismatch("coset_eq: dimension mismatch");
    std::vector<Rat> diff(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - w[i];
    return l.contains(diff);
}

namespace {

// The divisor of a supported on primes not dividing b.
Int strip_common_primes(Int a, const Int& b) {
    for (Int h = gcd(a, b); h != 1; h = gcd(a, b)) a /= h;
    return a;
}

}  // namespace

DescendResult descends_to_quotient(const Int& a, const Int& b, const Int& c, const Int& d,
                                   const Int& m, const Int& n) {
    if (m < 1 || n < 1) throw error("descends_to_quotient: moduli must be >= 1");
    bool exists = divides(m, c * n) && divides(n, b * m);
    // Per prime p | mn, the induced map is invertible at p iff: p divides
    // both moduli and p does not divide a*d - b*c (the forced vanishing of b
    // or c at p makes this the mod-p determinant), or p divides one modulus
    // only and the corresponding diagonal entry is a unit. The commonly
    // quoted gcd(a*d - b*c, m*n) = 1 is sufficient but not necessary.
    Int g = gcd(m, n);
    bool iso = gcd(a * d - b * c, g) == 1 && gcd(a, strip_common_primes(m, n)) == 1 &&
               gcd(d, strip_common_primes(n, m)) == 1;
    return {exists, iso};
}

}  // namespace circle7
