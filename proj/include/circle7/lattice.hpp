#pragma once

/**
 * @file lattice.hpp
 * @brief Exact integer matrix algebra: Hermite and Smith normal forms,
 *        finitely generated sublattices of Q^k, membership and coset tests.
 *
 * Conventions: matrices are row-major. Lattices are spanned by the rows of a
 * generator matrix; rational lattices carry one positive global denominator
 * so every normal-form computation stays in exact integers.
 */

#include "circle7/numtheory.hpp"

#include <vector>

namespace circle7 {

struct dimension_mismatch : error {
    using error::error;
};

class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw error("IntMat: entry count mismatch");
    }
    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_col(std::size_t i);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    std::vector<Int> row(std::size_t i) const;
    bool row_is_zero(std::size_t i) const;

    /// Exact determinant (square matrices), fraction-free elimination.
    Int det() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Row-style Hermite normal form: same dimensions and row span over Z as the
/// input; pivots positive, entries above each pivot reduced into [0, pivot),
/// zero rows collected at the bottom.
IntMat hnf(const IntMat& m);

/// Smith normal form with transforms: u * m * v = d, d diagonal with
/// d1 | d2 | ... >= 0, |det u| = |det v| = 1.
struct Snf {
    IntMat d, u, v;
};
Snf snf(const IntMat& m);

/// Sublattice of Q^k spanned by rows of gens/den.
class IntLattice {
  public:
    IntLattice(std::size_t ambient_dim, IntMat gens, Int den = Int(1));

    std::size_t ambient_dim() const { return dim_; }
    const IntMat& generators() const { return gens_; }
    const Int& denominator() const { return den_; }
    const IntMat& canonical_hnf() const { return hnf_; }

    /// True iff v is an integer combination of the generators.
    bool contains(const std::vector<Rat>& v) const;
    bool contains(const std::vector<Int>& v) const;

    /// Image lattice under right multiplication by an integer matrix.
    IntLattice transformed(const IntMat& m) const;

  private:
    std::size_t dim_;
    IntMat gens_;  // integralized generators (rows)
    Int den_;      // > 0
    IntMat hnf_;   // cached canonical form of gens_
};

bool lattice_eq(const IntLattice& a, const IntLattice& b);
bool coset_eq(const IntLattice& l, const std::vector<Rat>& v, const std::vector<Rat>& w);

/// Coset v + L in Q^k / L.
struct Coset {
    std::vector<Rat> v;
    const IntLattice* lattice;

    bool operator==(const Coset& o) const {
        if (lattice != o.lattice && !lattice_eq(*lattice, *o.lattice))
            throw error("Coset: comparing cosets of different lattices");
        return coset_eq(*lattice, v, o.v);
    }
};

/// Descent criterion for L(x,y) = (a*x + c*y, b*x + d*y) through the quotient
/// Z/m x Z/n: a well-defined induced map exists iff c*n = 0 mod m and
/// b*m = 0 mod n. is_iso decides exactly whether the induced map is bijective
/// (gcd(a*d - b*c, m*n) = 1 is sufficient; the exact test splits per prime).
struct DescendResult {
    bool exists;
    bool is_iso;  // meaningful only when exists
};
DescendResult descends_to_quotient(const Int& a, const Int& b, const Int& c, const Int& d,
                                   const Int& m, const Int& n);

/// Rational dense matrix, used for exact symmetric reduction.
class RatMat {
  public:
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace circle7
