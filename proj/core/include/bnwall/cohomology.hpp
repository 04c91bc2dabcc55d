#pragma once

// Exact cohomology of line bundles, and of ideal-sheaf twists I_Z(M) for a
// zero-dimensional cycle Z described by its length plus optional section-count
// overrides for special (non-generic) positions of Z.

#include <map>

#include "bnwall/picard.hpp"

namespace bnwall {

struct CohomologyTriple {
    i64 h0 = 0;
    i64 h1 = 0;
    i64 h2 = 0;

    i64 chi() const { return checked_add(checked_sub(h0, h1), h2); }
    bool operator==(const CohomologyTriple&) const = default;
};

// Model of a length-l zero-cycle Z. By default Z is in general position, so
// sections of O(M) through Z are cut by l independent conditions:
//     h0(I_Z(M)) = max(0, h0(O(M)) - l).
// An override pins h0(I_Z(M)) for a specific twist M; it must stay within
// [max(0, h0(O(M)) - l), h0(O(M))].
struct ZModel {
    i64 length = 0;
    std::map<DivisorClass, i64> overrides;

    static ZModel generic(i64 len) { return ZModel{len, {}}; }
};

// Riemann-Roch on a rational surface: chi(O(d)) = 1 + d.(d - K)/2.
i64 chi_line(const Surface& s, const DivisorClass& d);

// Global sections, via the fibration structure of F_e (pushforward to P^1 is
// a sum of line bundles) or the monomial count on P^2.
i64 h0_line(const Surface& s, const DivisorClass& d);

// h2 by Serre duality h0(K - d); h1 forced by chi. Negative h1 would refute
// one of the closed forms, so it raises consistency_error rather than return.
CohomologyTriple cohomology_line(const Surface& s, const DivisorClass& d);

// Throws invalid_input when an override leaves the admissible interval.
void validate_zmodel(const Surface& s, const ZModel& z);

// Cohomology of I_Z(d): h0 from the ZModel, h2 = h2(O(d)) (Z has dimension
// zero), h1 forced by chi(I_Z(d)) = chi(O(d)) - length.
CohomologyTriple cohomology_ideal(const Surface& s, const DivisorClass& d, const ZModel& z);

} // namespace bnwall
