#pragma once

// Slope stability oracle for rank-2 bundles presented as extensions
//     0 -> O(D) -> E -> I_Z(c1 - D) -> 0.
//
// E is L-stable iff no line bundle O(A) with 2(A.L) >= c1.L maps into E.
// A nonzero map O(A) -> E lands either in the sub (O(A) -> O(D), i.e. D - A
// effective) or, composing with the quotient, in I_Z(c1 - D) (i.e. Z imposes
// no full vanishing: h0(I_Z(c1 - D - A)) > 0). Both are decidable from the
// lattice and the ZModel, and the candidates form a finite box, so stability
// is a finite check.

#include <vector>

#include "bnwall/cohomology.hpp"

namespace bnwall {

struct ExtensionData {
    DivisorClass sub; // D
    DivisorClass c1;
    ZModel z;
};

// c2(E) = D.(c1 - D) + length. Negative values reject the presentation.
i64 implied_c2(const Surface& s, const ExtensionData& ext);

enum class DestabilizerRoute { into_sub, into_quotient };

const char* to_string(DestabilizerRoute r);

struct Destabilizer {
    DivisorClass cls;      // A
    DestabilizerRoute route;
    Rational slope_excess; // A.L - (c1.L)/2, >= 0 by construction
    bool semistable_only;  // excess == 0: contradicts stability, not semistability

    bool operator==(const Destabilizer&) const = default;
};

// All destabilizing classes, sorted by (A, route). The slope condition is the
// non-strict one, so an empty result certifies stability and entries with
// semistable_only are the ones that leave semistability intact.
std::vector<Destabilizer> destabilizers(const Surface& s, const DivisorClass& L,
                                        const ExtensionData& ext);

bool is_stable(const Surface& s, const DivisorClass& L, const ExtensionData& ext);

// h0(E) in [lower, upper]: h0(O(D)) + h0(I_Z(c1 - D)) bounds it from both
// sides when h1(O(D)) = 0 (then the count is exact); otherwise the sequence
// only gives the stated window.
struct SectionCount {
    i64 lower = 0;
    i64 upper = 0;

    bool exact() const { return lower == upper; }
};

SectionCount h0_bundle(const Surface& s, const ExtensionData& ext);

} // namespace bnwall
