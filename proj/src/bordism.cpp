#include "circle7/bordism.hpp"

namespace circle7 {

namespace {

const std::vector<GeneratorRow> kCharnums = {
    //                      sigma p1^2 x2p1 xyp1 y2p1  x4 x3y x2y2 xy3  y4
    {"HP2", {1, 4, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"Bott", {224, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"[V(2),z,0]", {2, 8, 4, 0, 0, 2, 0, 0, 0, 0}},
    {"[CP3xCP1,z3,z1]", {0, 0, 0, 4, 0, 0, 1, 0, 0, 0}},
    {"[V(2),z,z]", {2, 8, 4, 4, 4, 2, 2, 2, 2, 2}},
    {"[CP3xCP1,z1,z3]", {0, 0, 0, 4, 0, 0, 0, 0, 1, 0}},
    {"[V(2),0,z]", {2, 8, 0, 0, 4, 0, 0, 0, 0, 2}},
    {"[(S2)^4,D,0]", {0, 0, 0, 0, 0, 24, 0, 0, 0, 0}},
    {"[(S2)^4,x1+x2,x3+x4]", {0, 0, 0, 0, 0, 0, 0, 4, 0, 0}},
    {"[(S2)^4,0,D]", {0, 0, 0, 0, 0, 0, 0, 0, 0, 24}},
};

// Epimorphism onto Z^10, columns (sigma, Ahat, x^4/2, x^3y, x^2y^2/2, xy^3,
// y^4/2, sigma(x,x)/16, (sigma(x,y)-(x-y)^2)/8, sigma(y,y)/16).
const long kK2Spin[10][10] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {224, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {2, 0, 1, 2, 1, 2, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {2, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 12, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 2, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 12, 0, 0, -1},
};

const long kK1Spin[4][4] = {
    {1, 0, 0, 0},
    {224, -1, 0, 0},
    {2, 0, 1, 0},
    {0, 0, 12, -1},
};

const long kK1Nonspin[4][4] = {
    {1, 0, 0, 0},
    {224, -1, 0, 0},
    {1, 0, 1, 0},
    {1, 0, 6, -1},
};

// Columns (p1^2, x^2p1, xyp1, y^2p1, (x^2)^2, x^2.xy, x^2.y^2, (xy)^2,
// xy.y^2, (y^2)^2); rows are the signature-corrected generators.
const long kSe[9][10] = {
    {-896, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 4, 0, 0, 2, 0, 0, 0, 0, 0},
    {0, 0, 4, 0, 0, 1, 0, 0, 0, 0},
    {0, 4, 4, 4, 2, 2, 2, 2, 2, 2},
    {0, 0, 4, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 4, 0, 0, 0, 0, 0, 2},
    {0, 0, 0, 0, 24, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 4, 4, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 24},
};

const std::vector<std::string> kSeLabels = {
    "Bott-224HP2",       "[V(2),z,0]-2HP2",        "[CP3xCP1,z3,z1]",
    "[V(2),z,z]-2HP2",   "[CP3xCP1,z1,z3]",        "[V(2),0,z]-2HP2",
    "[(S2)^4,D,0]",      "[(S2)^4,x1+x2,x3+x4]",   "[(S2)^4,0,D]",
};

const std::vector<std::string> kK2SpinRowLabels = {
    "HP2",          "Bott",          "[V(2),z,0]",    "[CP3xCP1,z3,z1]", "[V(2),z,z]",
    "[CP3xCP1,z1,z3]", "[V(2),0,z]", "[(S2)^4,D,0]",  "[(S2)^4,x1+x2,x3+x4]", "[(S2)^4,0,D]",
};
const std::vector<std::string> kK2SpinColLabels = {
    "sigma", "Ahat", "x^4/2", "x^3y", "x^2y^2/2", "xy^3", "y^4/2",
    "sigma(x,x)/16", "(sigma(x,y)-(x-y)^2)/8", "sigma(y,y)/16",
};
const std::vector<std::string> kK1SpinRowLabels = {"HP2", "Bott", "[V(2),z]", "[(S2)^4,D]"};
const std::vector<std::string> kK1SpinColLabels = {"sigma", "Ahat", "x^4/2", "sigma(x,x)/16"};
const std::vector<std::string> kK1NonspinRowLabels = {"HP2", "Bott", "[CP4,z4]", "[(CP2)^2,D']"};
const std::vector<std::string> kK1NonspinColLabels = {"sigma", "e^{x/2}Ahat", "x^4",
                                                      "(sigma(x,x)-x^2)/8"};

const std::vector<std::string> kK2NonspinGenerators = {
    "HP2",
    "Bott",
    "[CP4,z4,0]",
    "[H_{2,3},z3,z2]",
    "[H_{2,3},z3,-z2]",
    "[H_{1,4},z1,z4]",
    "[H_{1,4},z1,-z4]",
    "[(CP2)^2,D',0]",
    "[H_{1,4},z1,-z1+2z4]",
    "[H_{2,3},z3,z2+z3]",
};
const std::vector<std::string> kK2NonspinComponents = {
    "sigma",
    "e^{x/2}Ahat",
    "x^4",
    "(x^3y+x^2y^2)/2",
    "(x^3y-x^2y^2)/2",
    "(xy^3+y^4)/2",
    "(xy^3-y^4)/2",
    "(sigma(x,x)-x^2)/8",
    "sigma(x+y,y)/16",
    "(sigma(y,y)-x^2)/8",
};

const long kDivisors[9] = {896, 48, 24, 48, 2, 1, 2, 1, 2};

IntMat from_table(const long* data, std::size_t rows, std::size_t cols) {
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i * cols + j];
    return m;
}

}  // namespace

const std::vector<GeneratorRow>& charnum_table() { return kCharnums; }

IntMat epimorphism_matrix(EpiTable which) {
    switch (which) {
        case EpiTable::K2Spin: return from_table(&kK2Spin[0][0], 10, 10);
        case EpiTable::K1Spin: return from_table(&kK1Spin[0][0], 4, 4);
        case EpiTable::K1Nonspin: return from_table(&kK1Nonspin[0][0], 4, 4);
    }
    throw internal_error("epimorphism_matrix: bad enum");
}

const std::vector<std::string>& epimorphism_row_labels(EpiTable which) {
    switch (which) {
        case EpiTable::K2Spin: return kK2SpinRowLabels;
        case EpiTable::K1Spin: return kK1SpinRowLabels;
        case EpiTable::K1Nonspin: return kK1NonspinRowLabels;
    }
    throw internal_error("epimorphism_row_labels: bad enum");
}

const std::vector<std::string>& epimorphism_col_labels(EpiTable which) {
    switch (which) {
        case EpiTable::K2Spin: return kK2SpinColLabels;
        case EpiTable::K1Spin: return kK1SpinColLabels;
        case EpiTable::K1Nonspin: return kK1NonspinColLabels;
    }
    throw internal_error("epimorphism_col_labels: bad enum");
}

bool verify_unimodular(EpiTable which) { return abs(epimorphism_matrix(which).det()) == 1; }

IntMat se_matrix() { return from_table(&kSe[0][0], 9, 10); }

const std::vector<std::string>& se_row_labels() { return kSeLabels; }

IntMat se_matrix_from_charnums() {
    // Signature-zero combinations: X - sigma(X) * HP2 for each generator
    // after Bott - 224 HP2, using (x^2)^2 = x^4 etc. and (xy)^2 = x^2 y^2 on
    // closed manifolds.
    const auto& t = kCharnums;
    IntMat m(9, 10);
    for (std::size_t r = 1; r < t.size(); ++r) {
        const auto& c = t[r].charnums;
        long sigma = c[0];
        // Monomial columns from the charnum columns.
        long mono[10] = {c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[7], c[8], c[9]};
        mono[0] -= sigma * 4;  // subtract sigma copies of HP2 (p1^2 = 4)
        for (std::size_t j = 0; j < 10; ++j) m(r - 1, j) = mono[j];
    }
    return m;
}

IntMat s_coordinate_change() {
    IntMat t(10, 10);
    t(0, 0) = 1;                 // S1 = p1^2
    t(1, 1) = 1;                 // S2 = x^2 p1 - 2 (x^2)^2
    t(4, 1) = -2;
    t(2, 2) = 1;                 // S3 = xy p1 - 4 x^2.xy + 6 x^2.y^2 - 4 xy.y^2
    t(5, 2) = -4;
    t(6, 2) = 6;
    t(8, 2) = -4;
    t(3, 3) = 1;                 // S4 = y^2 p1 - 2 (y^2)^2
    t(9, 3) = -2;
    t(4, 4) = 1;                 // S5 = (x^2)^2
    t(5, 5) = 1;                 // S6 = x^2.xy
    t(6, 6) = 1;                 // S7 = x^2.y^2
    t(8, 7) = 1;                 // S8 = xy.y^2
    t(9, 8) = 1;                 // S9 = (y^2)^2
    t(6, 9) = 1;                 // S10 = x^2.y^2 - (xy)^2
    t(7, 9) = -1;
    return t;
}

IntLattice s_lattice() { return IntLattice(10, se_matrix() * s_coordinate_change()); }

CanonicalDivisors canonical_divisors() {
    IntMat h = hnf(se_matrix() * s_coordinate_change());
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            Int want = (i == j) ? Int(kDivisors[i]) : Int(0);
            if (h(i, j) != want)
                throw table_inconsistent("canonical_divisors: normal form row " +
                                         std::to_string(i) + " differs from the table");
        }
    CanonicalDivisors d;
    for (std::size_t i = 0; i < 9; ++i) d.d[i] = kDivisors[i];
    return d;
}

DivisibilityReport divisibility_audit(const GeneratorRow& row) {
    const auto& c = row.charnums;
    auto even = [&](long v, const char* what) {
        if (v % 2 != 0)
            throw lemma_violation(row.label + ": " + what + " must be even");
    };
    even(c[5], "x^4");
    even(c[7], "x^2y^2");
    even(c[9], "y^4");
    long nxx = c[2] - 2 * c[5];
    long nxy = c[3] - 4 * (c[6] + c[8]) + 6 * c[7];
    long nyy = c[4] - 2 * c[9];
    if (nxx % 48 != 0 || nxy % 24 != 0 || nyy % 48 != 0)
        throw lemma_violation(row.label + ": signature quotient not integral");
    return {Int(nxx / 48), Int(nxy / 24), Int(nyy / 48)};
}

const std::vector<std::string>& k2_nonspin_generator_labels() { return kK2NonspinGenerators; }
const std::vector<std::string>& k2_nonspin_component_labels() { return kK2NonspinComponents; }

std::uint64_t table_checksum() {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](long v) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
    };
    for (const auto& row : kCharnums)
        for (long v : row.charnums) mix(v);
    for (const auto& row : kK2Spin)
        for (long v : row) mix(v);
    for (const auto& row : kK1Spin)
        for (long v : row) mix(v);
    for (const auto& row : kK1Nonspin)
        for (long v : row) mix(v);
    for (const auto& row : kSe)
        for (long v : row) mix(v);
    for (long v : kDivisors) mix(v);
    return h;
}

std::uint64_t expected_table_checksum() { return 9871166523537064180ull; }

void run_full_audit() {
    if (table_checksum() != expected_table_checksum())
        throw table_inconsistent("run_full_audit: table checksum changed");
    for (auto which : {EpiTable::K2Spin, EpiTable::K1Spin, EpiTable::K1Nonspin})
        if (!verify_unimodular(which))
            throw table_inconsistent("run_full_audit: epimorphism matrix not unimodular");
    if (se_matrix() != se_matrix_from_charnums())
        throw table_inconsistent("run_full_audit: S(e) differs from charnum-derived matrix");
    canonical_divisors();
    const auto& t = charnum_table();
    IntMat epi = epimorphism_matrix(EpiTable::K2Spin);
    for (std::size_t r = 0; r < t.size(); ++r) {
        auto rep = divisibility_audit(t[r]);
        if (rep.qxx != epi(r, 7) || rep.qxy != epi(r, 8) || rep.qyy != epi(r, 9))
            throw table_inconsistent("run_full_audit: quotient columns disagree at row " +
                                     t[r].label);
        // The remaining overlapping columns of the two tables.
        const auto& c = t[r].charnums;
        bool ok = epi(r, 0) == c[0] && 2 * epi(r, 2) == c[5] && epi(r, 3) == c[6] &&
                  2 * epi(r, 4) == c[7] && epi(r, 5) == c[8] && 2 * epi(r, 6) == c[9];
        if (!ok)
            throw table_inconsistent("run_full_audit: charnum columns disagree at row " +
                                     t[r].label);
    }
}

}  // namespace circle7
