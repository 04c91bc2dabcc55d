#include "bnwall/walls.hpp"

namespace bnwall {

namespace {

void require_hirzebruch(const Surface& s, const char* what) {
    if (!s.is_hirzebruch())
        throw invalid_input(std::string(what) + " supported on Hirzebruch surfaces only");
}

i64 wall_bound(const Surface& s, const DivisorClass& c1, i64 c2) {
    return checked_sub(checked_mul(4, c2), intersect(s, c1, c1));
}

} // namespace

const char* to_string(WallRejection r) {
    switch (r) {
        case WallRejection::none: return "none";
        case WallRejection::square_not_negative: return "square-not-negative";
        case WallRejection::parity: return "parity";
        case WallRejection::negative_length: return "negative-length";
        case WallRejection::misses_ample_cone: return "misses-ample-cone";
    }
    throw consistency_error("unknown wall rejection code");
}

const char* to_string(ChamberRelation r) {
    switch (r) {
        case ChamberRelation::same: return "same";
        case ChamberRelation::separated: return "separated";
        case ChamberRelation::first_on_wall: return "first-on-wall";
        case ChamberRelation::second_on_wall: return "second-on-wall";
    }
    throw consistency_error("unknown chamber relation code");
}

bool wall_meets_ample_cone(const Surface& s, const DivisorClass& xi) {
    require_hirzebruch(s, "walls are");
    require_class(s, xi);
    if (xi.is_zero())
        throw invalid_input("the zero class does not define a wall hyperplane");
    return checked_mul(xi[0], xi[1]) < 0;
}

WallCheck check_wall_class(const Surface& s, const DivisorClass& xi,
                           const DivisorClass& c1, i64 c2) {
    require_hirzebruch(s, "walls are");
    require_class(s, xi);
    require_class(s, c1);

    const i64 sq = intersect(s, xi, xi);
    if (sq >= 0)
        return WallCheck{std::nullopt, WallRejection::square_not_negative};
    if (!parity_compatible(s, xi, c1))
        return WallCheck{std::nullopt, WallRejection::parity};
    // Parity makes xi^2 = c1^2 mod 4, so the division is exact.
    const i64 defect = exact_div(checked_sub(sq, intersect(s, c1, c1)), 4);
    const i64 length = checked_add(c2, defect);
    if (length < 0)
        return WallCheck{std::nullopt, WallRejection::negative_length};
    if (!wall_meets_ample_cone(s, xi))
        return WallCheck{std::nullopt, WallRejection::misses_ample_cone};
    return WallCheck{WallClass{xi, sq, length}, WallRejection::none};
}

std::optional<WallClass> is_wall_class(const Surface& s, const DivisorClass& xi,
                                       const DivisorClass& c1, i64 c2) {
    return check_wall_class(s, xi, c1, c2).wall;
}

std::vector<WallClass> enumerate_walls(const Surface& s, const DivisorClass& c1, i64 c2) {
    require_hirzebruch(s, "wall enumeration is");
    require_class(s, c1);

    std::vector<WallClass> out;
    const i64 n = wall_bound(s, c1, c2);
    if (n <= 0) return out;

    const i64 e = s.e();
    for (i64 p = 1; checked_add(checked_mul(checked_mul(p, p), e), checked_mul(2, p)) <= n; ++p) {
        const i64 qmax = floor_div(checked_sub(n, checked_mul(checked_mul(p, p), e)),
                                   checked_mul(2, p));
        // q runs over negative values only: the p > 0 normalization together
        // with condition (4) forces q < 0.
        for (i64 qa = qmax; qa >= 1; --qa) {
            const DivisorClass xi(p, -qa);
            if (auto w = is_wall_class(s, xi, c1, c2))
                out.push_back(*w);
        }
    }
    return out;
}

std::vector<WallClass> separating_walls(const Surface& s, const DivisorClass& c1,
                                        i64 c2, const DivisorClass& L1,
                                        const DivisorClass& L2) {
    if (!is_ample(s, L1))
        throw invalid_input("polarization " + L1.str() + " is not ample on " + s.name());
    if (!is_ample(s, L2))
        throw invalid_input("polarization " + L2.str() + " is not ample on " + s.name());

    std::vector<WallClass> out;
    for (const WallClass& w : enumerate_walls(s, c1, c2)) {
        const i64 v1 = intersect(s, w.xi, L1);
        const i64 v2 = intersect(s, w.xi, L2);
        if (v1 > 0 && v2 < 0) {
            out.push_back(w);
        } else if (v1 < 0 && v2 > 0) {
            out.push_back(WallClass{-w.xi, w.xi_sq, w.length});
        }
    }
    return out;
}

ChamberRelation chamber_relation(const Surface& s, const DivisorClass& c1, i64 c2,
                                 const DivisorClass& L1, const DivisorClass& L2) {
    if (!is_ample(s, L1))
        throw invalid_input("polarization " + L1.str() + " is not ample on " + s.name());
    if (!is_ample(s, L2))
        throw invalid_input("polarization " + L2.str() + " is not ample on " + s.name());

    bool separated = false;
    for (const WallClass& w : enumerate_walls(s, c1, c2)) {
        const i64 v1 = intersect(s, w.xi, L1);
        const i64 v2 = intersect(s, w.xi, L2);
        if (v1 == 0) return ChamberRelation::first_on_wall;
        if (v2 == 0) return ChamberRelation::second_on_wall;
        if ((v1 > 0) != (v2 > 0)) separated = true;
    }
    return separated ? ChamberRelation::separated : ChamberRelation::same;
}

bool same_chamber(const Surface& s, const DivisorClass& c1, i64 c2,
                  const DivisorClass& L1, const DivisorClass& L2) {
    switch (chamber_relation(s, c1, c2, L1, L2)) {
        case ChamberRelation::same: return true;
        case ChamberRelation::separated: return false;
        case ChamberRelation::first_on_wall:
            throw invalid_input("polarization " + L1.str() + " lies on a wall of the type");
        case ChamberRelation::second_on_wall:
            throw invalid_input("polarization " + L2.str() + " lies on a wall of the type");
    }
    throw consistency_error("unhandled chamber relation");
}

} // namespace bnwall
