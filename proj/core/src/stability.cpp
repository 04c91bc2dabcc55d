#include "bnwall/stability.hpp"

#include <algorithm>

namespace bnwall {

namespace {

void validate_extension(const Surface& s, const ExtensionData& ext) {
    require_class(s, ext.sub);
    require_class(s, ext.c1);
    validate_zmodel(s, ext.z);
    if (implied_c2(s, ext) < 0)
        throw invalid_input("extension data implies c2 < 0");
}

} // namespace

i64 implied_c2(const Surface& s, const ExtensionData& ext) {
    require_class(s, ext.sub);
    require_class(s, ext.c1);
    return checked_add(intersect(s, ext.sub, ext.c1 - ext.sub), ext.z.length);
}

const char* to_string(DestabilizerRoute r) {
    switch (r) {
        case DestabilizerRoute::into_sub: return "into-sub";
        case DestabilizerRoute::into_quotient: return "into-quotient";
    }
    throw consistency_error("unknown destabilizer route");
}

std::vector<Destabilizer> destabilizers(const Surface& s, const DivisorClass& L,
                                        const ExtensionData& ext) {
    validate_extension(s, ext);
    if (!is_ample(s, L))
        throw invalid_input("polarization " + L.str() + " is not ample on " + s.name());

    const DivisorClass quot = ext.c1 - ext.sub;
    const i64 m = intersect(s, ext.c1, L); // slope condition: 2(A.L) >= m

    // Any destabilizing A is bounded above, coordinatewise, by max(D, c1 - D):
    // the into-sub route needs D - A effective and the into-quotient route
    // needs c1 - D - A effective (a twist with no sections admits no map from
    // I_Z either). Below, A.L is a positive combination of the coordinates,
    // so the slope condition plus the upper corner bound each coordinate from
    // beneath. The scan is therefore complete.
    std::vector<Destabilizer> out;
    const auto consider = [&](const DivisorClass& a) {
        const i64 al2 = checked_mul(2, intersect(s, a, L));
        if (al2 < m) return;
        const Rational excess(checked_sub(al2, m), 2);
        if (is_effective(s, ext.sub - a))
            out.push_back({a, DestabilizerRoute::into_sub, excess, excess.is_zero()});
        if (cohomology_ideal(s, quot - a, ext.z).h0 > 0)
            out.push_back({a, DestabilizerRoute::into_quotient, excess, excess.is_zero()});
    };

    if (s.is_hirzebruch()) {
        const i64 ux = std::max(ext.sub[0], quot[0]);
        const i64 uy = std::max(ext.sub[1], quot[1]);
        const i64 u = checked_sub(L[1], checked_mul(L[0], s.e())); // > 0, L ample
        const i64 v = L[0];                                        // > 0
        const i64 xlo = ceil_div(checked_sub(m, checked_mul(2, checked_mul(uy, v))),
                                 checked_mul(2, u));
        const i64 ylo = ceil_div(checked_sub(m, checked_mul(2, checked_mul(ux, u))),
                                 checked_mul(2, v));
        for (i64 x = xlo; x <= ux; ++x)
            for (i64 y = ylo; y <= uy; ++y)
                consider(DivisorClass(x, y));
    } else {
        const i64 ux = std::max(ext.sub[0], quot[0]);
        const i64 xlo = ceil_div(m, checked_mul(2, L[0]));
        for (i64 x = xlo; x <= ux; ++x)
            consider(DivisorClass(x));
    }
    return out;
}

bool is_stable(const Surface& s, const DivisorClass& L, const ExtensionData& ext) {
    return destabilizers(s, L, ext).empty();
}

SectionCount h0_bundle(const Surface& s, const ExtensionData& ext) {
    validate_extension(s, ext);
    const CohomologyTriple sub = cohomology_line(s, ext.sub);
    const i64 quot_h0 = cohomology_ideal(s, ext.c1 - ext.sub, ext.z).h0;
    SectionCount c;
    c.upper = checked_add(sub.h0, quot_h0);
    c.lower = checked_add(sub.h0, std::max<i64>(0, checked_sub(quot_h0, sub.h1)));
    return c;
}

} // namespace bnwall
