#pragma once

// Walls of type (c1, c2) in the ample cone of a Hirzebruch surface.
//
// A class xi defines a wall when
//   (1) xi^2 < 0,
//   (2) xi + c1 is divisible by 2 in Pic,
//   (3) length := c2 + (xi^2 - c1^2)/4 is a non-negative integer,
//   (4) the hyperplane xi-perp meets the open ample cone.
// Walls come in pairs {xi, -xi}; enumeration emits the representative with
// positive C0-coordinate, while oriented contexts (separating a specific
// ordered pair of polarizations) may carry either sign.

#include <optional>
#include <vector>

#include "bnwall/picard.hpp"

namespace bnwall {

struct WallClass {
    DivisorClass xi;
    i64 xi_sq = 0;
    i64 length = 0;

    bool operator==(const WallClass&) const = default;
    auto operator<=>(const WallClass&) const = default;
};

enum class WallRejection {
    none,
    square_not_negative,
    parity,
    negative_length,
    misses_ample_cone,
};

const char* to_string(WallRejection r);

struct WallCheck {
    std::optional<WallClass> wall;
    WallRejection rejection = WallRejection::none;
};

// Whether xi-perp meets the open ample cone. For xi = p C0 + q F this is
// exactly p*q < 0: on an ample class a C0 + b F the value p(b - ae) + qa has
// the sign of p for q = 0 (and of q for p = 0), while opposite signs of p, q
// place a ray of zeros inside the cone. Rejects the zero class.
bool wall_meets_ample_cone(const Surface& s, const DivisorClass& xi);

// Applies conditions (1)-(4) in order and reports the first failure.
WallCheck check_wall_class(const Surface& s, const DivisorClass& xi,
                           const DivisorClass& c1, i64 c2);

std::optional<WallClass> is_wall_class(const Surface& s, const DivisorClass& xi,
                                       const DivisorClass& c1, i64 c2);

// All walls of type (c1, c2), sign-normalized to p > 0 and sorted by (p, q).
//
// Completeness of the search box: conditions (1) and (3) pin
// 0 < -xi^2 <= N := 4 c2 - c1^2, and -xi^2 = p^2 e + 2 p |q| for the
// normalized sign pattern p > 0, q < 0 forced by (4). Hence p^2 e + 2p <= N
// and |q| <= (N - p^2 e) / (2p), a finite box. Empty result when N <= 0.
std::vector<WallClass> enumerate_walls(const Surface& s, const DivisorClass& c1, i64 c2);

// Walls separating two ample polarizations, oriented so xi.L1 > 0 > xi.L2.
std::vector<WallClass> separating_walls(const Surface& s, const DivisorClass& c1,
                                        i64 c2, const DivisorClass& L1,
                                        const DivisorClass& L2);

enum class ChamberRelation {
    same,          // no wall of the type separates the two polarizations
    separated,     // at least one does
    first_on_wall, // L1 lies on a wall of the type, chambers undefined for it
    second_on_wall,
};

const char* to_string(ChamberRelation r);

ChamberRelation chamber_relation(const Surface& s, const DivisorClass& c1, i64 c2,
                                 const DivisorClass& L1, const DivisorClass& L2);

// Boolean form of chamber_relation; a polarization sitting on a wall is not a
// yes/no situation, so that case throws invalid_input.
bool same_chamber(const Surface& s, const DivisorClass& c1, i64 c2,
                  const DivisorClass& L1, const DivisorClass& L2);

} // namespace bnwall
