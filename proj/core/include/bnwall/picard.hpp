#pragma once

// Picard lattices of the target surfaces.
//
// Two families are supported:
//   * Hirzebruch surfaces F_e = P(O + O(-e)) over P^1, e >= 0, with basis
//     (C0, F): C0 the section of self-intersection -e, F the fibre.
//     Intersection form: C0^2 = -e, F^2 = 0, C0.F = 1.
//   * The projective plane P^2 with basis (H), H^2 = 1.
//
// Divisor classes are integer coordinate vectors in the fixed basis; all
// numerology downstream is a function of this lattice data alone.

#include <array>
#include <compare>
#include <string>

#include "bnwall/arith.hpp"

namespace bnwall {

class DivisorClass {
public:
    // Default: the zero class in a rank-2 lattice. Rank mismatches against a
    // surface are caught by require_class at every entry point.
    DivisorClass() : rank_(2), c_{0, 0} {}
    // Rank-2 lattice: a*C0 + b*F on a Hirzebruch surface.
    DivisorClass(i64 a, i64 b) : rank_(2), c_{a, b} {}
    // Rank-1 lattice: m*H on the plane.
    explicit DivisorClass(i64 m) : rank_(1), c_{m, 0} {}

    static DivisorClass zero(int rank) {
        return rank == 1 ? DivisorClass(0) : DivisorClass(0, 0);
    }

    int rank() const { return rank_; }

    i64 operator[](int i) const {
        if (i < 0 || i >= rank_)
            throw invalid_input("divisor coordinate index out of range");
        return c_[static_cast<std::size_t>(i)];
    }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0; }

    bool all_even() const { return c_[0] % 2 == 0 && c_[1] % 2 == 0; }

    DivisorClass operator-() const {
        DivisorClass r = *this;
        r.c_[0] = checked_neg(r.c_[0]);
        r.c_[1] = checked_neg(r.c_[1]);
        return r;
    }

    DivisorClass scaled(i64 k) const {
        DivisorClass r = *this;
        r.c_[0] = checked_mul(r.c_[0], k);
        r.c_[1] = checked_mul(r.c_[1], k);
        return r;
    }

    // Exact halving; every coordinate must be even.
    DivisorClass half() const {
        DivisorClass r = *this;
        r.c_[0] = exact_div(r.c_[0], 2);
        r.c_[1] = exact_div(r.c_[1], 2);
        return r;
    }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        requireSameRank(x, y);
        DivisorClass r = x;
        r.c_[0] = checked_add(x.c_[0], y.c_[0]);
        r.c_[1] = checked_add(x.c_[1], y.c_[1]);
        return r;
    }

    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        requireSameRank(x, y);
        DivisorClass r = x;
        r.c_[0] = checked_sub(x.c_[0], y.c_[0]);
        r.c_[1] = checked_sub(x.c_[1], y.c_[1]);
        return r;
    }

    bool operator==(const DivisorClass&) const = default;
    // Lexicographic on (rank, coordinates); gives every container and every
    // emitted list a deterministic order.
    auto operator<=>(const DivisorClass&) const = default;

    std::string str() const;

private:
    static void requireSameRank(const DivisorClass& x, const DivisorClass& y) {
        if (x.rank_ != y.rank_)
            throw invalid_input("divisor classes live on different surfaces");
    }

    int rank_;
    std::array<i64, 2> c_; // unused tail coordinate fixed at 0
};

class Surface {
public:
    enum class Kind { hirzebruch, projective_plane };

    static Surface hirzebruch(i64 e) {
        if (e < 0)
            throw invalid_input("Hirzebruch invariant e must be >= 0");
        return Surface(Kind::hirzebruch, e);
    }
    static Surface projective_plane() { return Surface(Kind::projective_plane, 0); }

    Kind kind() const { return kind_; }
    bool is_hirzebruch() const { return kind_ == Kind::hirzebruch; }

    i64 e() const {
        if (!is_hirzebruch())
            throw invalid_input("surface invariant e is defined only for F_e");
        return e_;
    }

    int picard_rank() const { return is_hirzebruch() ? 2 : 1; }

    // Both families are rational, so chi(O_X) = 1 and the arithmetic genus
    // term in Riemann-Roch vanishes.
    i64 arithmetic_genus() const { return 0; }

    std::string name() const {
        return is_hirzebruch() ? "F" + std::to_string(e_) : "P2";
    }

    bool operator==(const Surface&) const = default;

private:
    Surface(Kind k, i64 e) : kind_(k), e_(e) {}

    Kind kind_;
    i64 e_;
};

// Throws invalid_input unless d lives in Pic of s.
void require_class(const Surface& s, const DivisorClass& d);

i64 intersect(const Surface& s, const DivisorClass& d1, const DivisorClass& d2);

DivisorClass canonical_class(const Surface& s);

// Open ample cone: on F_e, a > 0 and b > a*e; on P^2, m > 0.
bool is_ample(const Surface& s, const DivisorClass& d);

// Effective cone: on F_e, a >= 0 and b >= 0; on P^2, m >= 0.
bool is_effective(const Surface& s, const DivisorClass& d);

// True when xi + c1 is divisible by 2 in the lattice, i.e. xi is congruent
// to c1 mod 2 (the numerical condition for xi = 2D - c1 to have a solution).
bool parity_compatible(const Surface& s, const DivisorClass& xi, const DivisorClass& c1);

} // namespace bnwall
