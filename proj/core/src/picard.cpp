#include "bnwall/picard.hpp"

namespace bnwall {

std::string DivisorClass::str() const {
    if (rank_ == 1) return "(" + std::to_string(c_[0]) + ")";
    return "(" + std::to_string(c_[0]) + "," + std::to_string(c_[1]) + ")";
}

void require_class(const Surface& s, const DivisorClass& d) {
    if (d.rank() != s.picard_rank())
        throw invalid_input("divisor class has rank " + std::to_string(d.rank()) +
                            " but Pic(" + s.name() + ") has rank " +
                            std::to_string(s.picard_rank()));
}

i64 intersect(const Surface& s, const DivisorClass& d1, const DivisorClass& d2) {
    require_class(s, d1);
    require_class(s, d2);
    if (!s.is_hirzebruch())
        return checked_mul(d1[0], d2[0]);
    // (a1 C0 + b1 F).(a2 C0 + b2 F) = -e a1 a2 + a1 b2 + a2 b1
    const i64 diag = checked_mul(checked_mul(d1[0], d2[0]), s.e());
    const i64 mixed = checked_add(checked_mul(d1[0], d2[1]), checked_mul(d1[1], d2[0]));
    return checked_sub(mixed, diag);
}

DivisorClass canonical_class(const Surface& s) {
    if (!s.is_hirzebruch())
        return DivisorClass(-3);
    return DivisorClass(-2, checked_neg(checked_add(s.e(), 2)));
}

bool is_ample(const Surface& s, const DivisorClass& d) {
    require_class(s, d);
    if (!s.is_hirzebruch())
        return d[0] > 0;
    return d[0] > 0 && d[1] > checked_mul(d[0], s.e());
}

bool is_effective(const Surface& s, const DivisorClass& d) {
    require_class(s, d);
    if (!s.is_hirzebruch())
        return d[0] >= 0;
    return d[0] >= 0 && d[1] >= 0;
}

bool parity_compatible(const Surface& s, const DivisorClass& xi, const DivisorClass& c1) {
    require_class(s, xi);
    require_class(s, c1);
    return (xi + c1).all_even();
}

} // namespace bnwall
