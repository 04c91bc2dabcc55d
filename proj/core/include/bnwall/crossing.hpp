#pragma once

// Wall-crossing data. Crossing a wall xi of type (c1, c2) trades one family
// of bundles for another; both families consist of extensions
//     0 -> O(D) -> E -> I_Z(c1 - D) -> 0,   D = (xi + c1)/2,  len Z = length,
// and each is identified with a Brill-Noether locus of twisted invariants in
// the moduli space on the other side of the wall.

#include <string>
#include <vector>

#include "bnwall/brill_noether.hpp"
#include "bnwall/cohomology.hpp"
#include "bnwall/walls.hpp"

namespace bnwall {

// Sections of a generic family member after twisting down by its sub-line
// bundle: the sub contributes exactly the section of O(D) itself. Family
// dimensions below assume this count; reports carry the assumption.
inline constexpr i64 kGenericSubSections = 1;

struct ExtFamily {
    WallClass xi;            // oriented representative this family belongs to
    DivisorClass sub_divisor; // D = (xi + c1)/2
    i64 length = 0;          // len Z, equal to xi.length
    i64 dim = 0;
};

// Builds the family attached to an oriented wall representative. The wall
// must certify for (c1, c2) up to sign; the orientation of xi is preserved.
ExtFamily ext_family(const Surface& s, const WallClass& xi, const DivisorClass& c1,
                     i64 c2);

// dim = h1(I_Z(-xi + K)) + 2*length - kGenericSubSections: the projectivized
// extension space (its dimension is h1(I_Z(-xi + K)) - 1 by duality) plus the
// choice of Z. Negative values mean the family is empty and raise
// consistency_error.
i64 dim_ext_family(const Surface& s, const ExtFamily& f);

// How a family sits inside the moduli space across the wall: twisting a member
// by O(-D) gives a stable bundle with c1' = -xi, c2' = length, one section
// more than generic, i.e. a point of W^1(2; c1', c2') for the polarization on
// that side.
struct BNIdentification {
    DivisorClass xi;          // the family's oriented wall class
    DivisorClass c1;          // twisted first Chern class, -xi
    i64 c2 = 0;               // twisted second Chern class, the cycle length
    i64 k = 1;
    DivisorClass polarization;
    i64 rho = 0;              // rho^1 of the twisted invariants
    i64 family_dim = 0;
    bool matched = false;     // family_dim == rho
};

struct CrossingReport {
    DivisorClass from_pol;
    DivisorClass to_pol;
    std::vector<ExtFamily> removed; // xi.from > 0: unstable on the from-side
    std::vector<ExtFamily> added;   // xi.from < 0: new on the from-side
    std::vector<BNIdentification> identifications; // removed families first
};

// Both polarizations must be ample and on no wall of the type; same chamber
// yields an empty report (not an error).
CrossingReport crossing_report(const Surface& s, const DivisorClass& c1, i64 c2,
                               const DivisorClass& from, const DivisorClass& to);

// The one-parameter scenario on F_e with c1 = C0 + alpha*F (alpha in {0,1})
// and 1 <= n <= c2 - 1: the polarizations
//     L_n = C0 + (e + 2 c2 - alpha - 2n + 1) F
// straddle exactly one wall between consecutive indices, namely
//     xi_n = C0 - (2 c2 - alpha - 2n) F,
// and the two extension families match W^1 loci of the twisted invariants
//     c1~ = C0 + (alpha + 2n - 2 c2) F,  c1- = -C0 + (2 c2 - alpha - 2n) F.
struct HirzebruchScenario {
    i64 e = 0;
    i64 alpha = 0;
    i64 c2 = 0;
    i64 n = 0;
    DivisorClass c1;
    DivisorClass L_n;
    DivisorClass L_next;
    WallClass xi_n;
    // xi_n is the only class of the type cutting the ray {x : x.xi_n = 0} of
    // the ample cone with positive pairing against L_n (uniqueness on the
    // common wall; the sigma = +-1 argument).
    bool wall_unique = false;
    // Walls cutting other rays that nevertheless lie strictly between L_n and
    // L_{n+1}. Empty for small c2; the first case is (3,-4) between (1,3) and
    // (1,1) for type ((1,0),6) on F_0. The two-term decomposition below only
    // accounts for the xi_n families, so callers should treat it as exact
    // only when this list is empty.
    std::vector<WallClass> extra_separating;
    DivisorClass c1_tilde;
    DivisorClass c1_bar;
    BnDefinedCheck defined_tilde; // hypothesis for W^1(2; c1~, n) at L_n
    BnDefinedCheck defined_bar;   // hypothesis for W^1(2; c1-, n) at L_next
    ExtFamily removed;            // E(xi_n), dimension 4 c2 - n + e - 2 alpha - 3
    ExtFamily added;              // E(-xi_n), dimension 3n - 1
    i64 rho_tilde = 0;
    i64 rho_bar = 0;
    bool dim_match_added = false;   // added.dim == rho_tilde
    bool dim_match_removed = false; // removed.dim == rho_bar
    std::string decomposition;      // the instantiated decomposition statement
};

// Throws boundary_polarization for alpha = 1, n = c2 - 1, where L_{n+1} lands
// on the nef boundary and the chamber argument does not apply.
HirzebruchScenario hirzebruch_scenario(i64 e, i64 alpha, i64 c2, i64 n);

} // namespace bnwall
