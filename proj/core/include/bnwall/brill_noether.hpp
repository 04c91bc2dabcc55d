#pragma once

// Numerology of Brill-Noether loci
//     W^k(r; c1, c2) = { stable E : h0(E) >= k }
// inside moduli of stable sheaves on a rational surface: Euler characteristics,
// expected dimensions, and the expected codimension ("rho") counts, together
// with two worked families where every number is known in closed form.

#include <array>
#include <optional>
#include <vector>

#include "bnwall/picard.hpp"

namespace bnwall {

struct ChernData {
    i64 rank = 1;
    DivisorClass c1;
    i64 c2 = 0;
};

struct BNRecord {
    i64 k = 0;
    i64 chi = 0;        // chi of a sheaf with the given Chern data
    i64 moduli_dim = 0; // 4c2 - c1^2 - 3 for rank 2
    i64 rho = 0;        // moduli_dim - k*(k - chi)
};

// Codimension window for a non-empty Brill-Noether locus. `lower` is absent
// when no general lower bound is available.
struct CodimInterval {
    std::optional<i64> lower;
    i64 upper = 0;
};

struct BnDefinedCheck {
    bool defined = false;  // c1.H >= rank * K.H
    bool equality = false; // the comparison held with equality
};

// Riemann-Roch for a rank-r torsion-free sheaf on a rational surface:
// chi = r - c1.K/2 + c1^2/2 - c2.
i64 chi_sheaf(const Surface& s, const ChernData& c);

// Expected dimension of the moduli space of rank-2 stable sheaves.
i64 moduli_dim(const Surface& s, const ChernData& c);

// rho^k = moduli_dim - k*(k - chi), the expected codimension count for W^k.
// Rank 2 only; k >= 0.
BNRecord bn_number(const Surface& s, const ChernData& c, i64 k);

// Numerical hypothesis under which the W^k are defined as determinantal loci:
// c1.H >= rank * K.H for the chosen polarization H. The underlying vanishing
// argument needs strict inequality, so equality is reported separately for
// callers that want to warn on it.
BnDefinedCheck bn_defined(const Surface& s, const DivisorClass& H, i64 rank,
                          const DivisorClass& c1);

// Codimension window for non-empty W^k(r; c1, c2) on P^2 (any polarization;
// the plane has one). Requires c1 > -3r so that the locus theory applies:
//   chi > 0:  [2, chi + 1]
//   chi = 0:  [1, 1]
//   chi < 0:  [absent, 1 - chi]   (counting against W^0 with chi clamped to 0)
CodimInterval gh_codim_bounds(const ChernData& c);

// Stratification by section count of the moduli space M(2; (2n-1) f, 2n) on
// the quadric F_0, where f is the second ruling. Every stratum dimension is
// known exactly, which makes the family a sharpness test for rho^k.
struct QuadricRow {
    BNRecord bn;
    i64 known_dim = 0;            // 8n - 2k - 1
    bool rho_negative_nonempty = false; // rho^k < 0 yet the locus is non-empty
    bool dim_exceeds_rho = false;       // rho^k > 0 but known_dim > rho^k
};

struct QuadricTable {
    i64 n = 0;
    i64 chi = 0;        // equals 1 for the whole family
    i64 moduli_dim = 0; // 8n - 3
    std::vector<QuadricRow> rows; // k = 1..n
};

QuadricTable quadric_strata(i64 n);

// Rank-2 instanton bundles on P^3 with c2 = n, treated through their moduli
// space MI(n) of dimension 8n - 11 and chi = -3n + 11. Only k = 1, 2, 3 can
// give non-empty W^k (sections are at most 2 plus the trivial bound), and for
// n > 13 non-emptiness is equivalent to rho^k >= 0.
struct InstantonRow {
    i64 k = 0;
    i64 rho = 0;
};

struct InstantonReport {
    i64 n = 0;
    i64 chi = 0;
    i64 moduli_dim = 0;
    std::array<InstantonRow, 3> rows{};
    std::vector<i64> nonempty_ks; // {1, 2}
    bool equivalence_checked = false; // n > 13: rho sign pattern verified
};

InstantonReport instanton_report(i64 n);

} // namespace bnwall
