#include "bnwall/cohomology.hpp"

#include <algorithm>

namespace bnwall {

i64 chi_line(const Surface& s, const DivisorClass& d) {
    require_class(s, d);
    const DivisorClass k = canonical_class(s);
    const i64 dd = intersect(s, d, d - k);
    // d.(d-K) is even by the genus formula; a remainder would be a bug.
    return checked_add(1, exact_div(dd, 2));
}

namespace {

// Sum_{j=0..jmax} (b + 1 - j*e) in closed form, all terms positive by choice
// of jmax.
i64 fibre_degree_sum(i64 jmax, i64 b, i64 e) {
    const i64 terms = checked_add(jmax, 1);
    const i64 head = checked_mul(terms, checked_add(b, 1));
    const i64 tri = exact_div(checked_mul(jmax, checked_add(jmax, 1)), 2);
    return checked_sub(head, checked_mul(e, tri));
}

} // namespace

i64 h0_line(const Surface& s, const DivisorClass& d) {
    require_class(s, d);
    if (!s.is_hirzebruch()) {
        const i64 m = d[0];
        if (m < 0) return 0;
        return exact_div(checked_mul(checked_add(m, 1), checked_add(m, 2)), 2);
    }
    // h0(a C0 + b F) = sum_{j=0..a} max(0, b - j*e + 1): sections decompose
    // along the ruling as H0(P^1, O(b - j*e)) summands.
    const i64 a = d[0], b = d[1], e = s.e();
    if (a < 0 || b < 0) return 0;
    const i64 jmax = (e > 0) ? std::min(a, floor_div(b, e)) : a;
    return fibre_degree_sum(jmax, b, e);
}

CohomologyTriple cohomology_line(const Surface& s, const DivisorClass& d) {
    const i64 h0 = h0_line(s, d);
    const i64 h2 = h0_line(s, canonical_class(s) - d);
    const i64 h1 = checked_sub(checked_add(h0, h2), chi_line(s, d));
    if (h1 < 0)
        throw consistency_error("negative h1 for line bundle " + d.str() +
                                " on " + s.name());
    return CohomologyTriple{h0, h1, h2};
}

void validate_zmodel(const Surface& s, const ZModel& z) {
    if (z.length < 0)
        throw invalid_input("zero-cycle length must be >= 0");
    for (const auto& [twist, value] : z.overrides) {
        require_class(s, twist);
        const i64 full = h0_line(s, twist);
        const i64 generic = std::max<i64>(0, checked_sub(full, z.length));
        if (value < generic || value > full)
            throw invalid_input(
                "section-count override " + std::to_string(value) + " at twist " +
                twist.str() + " leaves the interval [" + std::to_string(generic) +
                ", " + std::to_string(full) + "]");
    }
}

CohomologyTriple cohomology_ideal(const Surface& s, const DivisorClass& d, const ZModel& z) {
    require_class(s, d);
    validate_zmodel(s, z);

    const i64 full = h0_line(s, d);
    i64 h0;
    if (auto it = z.overrides.find(d); it != z.overrides.end()) {
        h0 = it->second;
    } else {
        h0 = std::max<i64>(0, checked_sub(full, z.length));
    }

    const i64 h2 = h0_line(s, canonical_class(s) - d);
    const i64 chi = checked_sub(chi_line(s, d), z.length);
    const i64 h1 = checked_sub(checked_add(h0, h2), chi);
    if (h1 < 0)
        throw consistency_error("negative h1 for ideal-sheaf twist " + d.str() +
                                " on " + s.name());
    return CohomologyTriple{h0, h1, h2};
}

} // namespace bnwall
