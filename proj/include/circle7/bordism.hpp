#pragma once

/**
 * @file bordism.hpp
 * @brief The spin bordism data backing the s-invariant: characteristic
 *        numbers of the generator manifolds, the epimorphisms onto Z^10 and
 *        Z^4, the matrix S(e) of the signature-zero subgroup, the coordinate
 *        change to the S_1..S_10 functionals and its canonical divisors.
 *
 * All tables are embedded as constants guarded by a checksum; every derived
 * claim (unimodularity, divisibility, the canonical form) is recomputed from
 * the raw data by the audit entry points, so a transcription error surfaces
 * as a hard failure instead of propagating.
 */

#include "circle7/lattice.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace circle7 {

struct table_inconsistent : error {
    using error::error;
};
struct lemma_violation : error {
    using error::error;
};

/// Characteristic numbers of one basis element of Omega_8^Spin(K_2), in the
/// column order (sigma, p1^2, x^2 p1, xy p1, y^2 p1, x^4, x^3 y, x^2 y^2,
/// x y^3, y^4).
struct GeneratorRow {
    std::string label;
    std::array<long, 10> charnums;
};

/// The ten generators with their characteristic numbers.
const std::vector<GeneratorRow>& charnum_table();

enum class EpiTable { K2Spin, K1Spin, K1Nonspin };

/// Value matrix of the epimorphism onto Z^10 (K2Spin) or Z^4 (K1 variants);
/// rows are generators, columns homomorphism components.
IntMat epimorphism_matrix(EpiTable which);
const std::vector<std::string>& epimorphism_row_labels(EpiTable which);
const std::vector<std::string>& epimorphism_col_labels(EpiTable which);

/// |det| = 1 for the epimorphism matrix (the isomorphism claim).
bool verify_unimodular(EpiTable which);

/// 9x10 matrix of the signature-zero generators evaluated on the monomial
/// functionals, columns (p1^2, x^2 p1, xy p1, y^2 p1, (x^2)^2, x^2.xy,
/// x^2.y^2, (xy)^2, xy.y^2, (y^2)^2).
IntMat se_matrix();
const std::vector<std::string>& se_row_labels();

/// Same matrix recomputed from charnum_table() (signature correction by
/// HP^2 multiples); used by the audit to cross-check the embedded copy.
IntMat se_matrix_from_charnums();

/// Invertible 10x10 coordinate change T: monomial values row-vector * T =
/// values of the functionals S_1..S_10 (S_1 = p1^2, S_2 = x^2 p1 - 2 (x^2)^2,
/// ..., S_10 = x^2.y^2 - (xy)^2).
IntMat s_coordinate_change();

/// The divisors d_i normalizing S_i into Q/Z. Computes hnf(se_matrix() * T)
/// and checks it is exactly diag(896,48,24,48,2,1,2,1,2) in the S_1..S_9
/// columns with the S_10 column identically zero.
struct CanonicalDivisors {
    std::array<long, 9> d;
};
CanonicalDivisors canonical_divisors();

/// The lattice in Q^10 spanned by the rows of se_matrix() * T.
IntLattice s_lattice();

/// Divisibility checks on one generator row: x^4, x^2 y^2, y^4 even and the
/// three signature quotients integral; returns the quotients, which must
/// reproduce the last three epimorphism components.
struct DivisibilityReport {
    Int qxx;   // (x^2 p1 - 2 x^4) / 48
    Int qxy;   // (xy p1 - 4(x^3 y + x y^3) + 6 x^2 y^2) / 24
    Int qyy;   // (y^2 p1 - 2 y^4) / 48
};
DivisibilityReport divisibility_audit(const GeneratorRow& row);

/// Generator labels of the K2 non-spin group (no numeric table exists for
/// it, so only the labels are recorded).
const std::vector<std::string>& k2_nonspin_generator_labels();
const std::vector<std::string>& k2_nonspin_component_labels();

/// FNV-1a over every embedded integer; audits compare it with the frozen
/// value to detect accidental edits of the tables.
std::uint64_t table_checksum();
std::uint64_t expected_table_checksum();

/// Runs every audit; throws table_inconsistent / lemma_violation on failure.
void run_full_audit();

}  // namespace circle7
