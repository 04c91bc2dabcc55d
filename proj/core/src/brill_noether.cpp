#include "bnwall/brill_noether.hpp"

namespace bnwall {

i64 chi_sheaf(const Surface& s, const ChernData& c) {
    if (c.rank < 1)
        throw invalid_input("sheaf rank must be >= 1");
    require_class(s, c.c1);
    const DivisorClass k = canonical_class(s);
    const i64 sq = intersect(s, c.c1, c.c1);
    const i64 ck = intersect(s, c.c1, k);
    // (c1^2 - c1.K) is even by the genus formula.
    const i64 rr = exact_div(checked_sub(sq, ck), 2);
    return checked_sub(checked_add(c.rank, rr), c.c2);
}

i64 moduli_dim(const Surface& s, const ChernData& c) {
    if (c.rank != 2)
        throw invalid_input("moduli dimension formula applies to rank 2 only");
    require_class(s, c.c1);
    const i64 sq = intersect(s, c.c1, c.c1);
    return checked_sub(checked_sub(checked_mul(4, c.c2), sq), 3);
}

BNRecord bn_number(const Surface& s, const ChernData& c, i64 k) {
    if (k < 0)
        throw invalid_input("section-count threshold k must be >= 0");
    BNRecord r;
    r.k = k;
    r.chi = chi_sheaf(s, c);
    r.moduli_dim = moduli_dim(s, c);
    r.rho = checked_sub(r.moduli_dim, checked_mul(k, checked_sub(k, r.chi)));
    return r;
}

BnDefinedCheck bn_defined(const Surface& s, const DivisorClass& H, i64 rank,
                          const DivisorClass& c1) {
    if (rank < 1)
        throw invalid_input("sheaf rank must be >= 1");
    if (!is_ample(s, H))
        throw invalid_input("polarization " + H.str() + " is not ample on " + s.name());
    require_class(s, c1);
    const i64 lhs = intersect(s, c1, H);
    const i64 rhs = checked_mul(rank, intersect(s, canonical_class(s), H));
    return BnDefinedCheck{lhs >= rhs, lhs == rhs};
}

CodimInterval gh_codim_bounds(const ChernData& c) {
    if (c.c1.rank() != 1)
        throw invalid_input("codimension bounds are stated on P^2; c1 must have one coordinate");
    if (c.rank < 1)
        throw invalid_input("sheaf rank must be >= 1");
    if (c.c1[0] <= checked_mul(-3, c.rank))
        throw invalid_input("requires c1 > -3*rank on P^2");
    const i64 chi = chi_sheaf(Surface::projective_plane(), c);
    if (chi > 0) return CodimInterval{2, checked_add(chi, 1)};
    if (chi == 0) return CodimInterval{1, 1};
    return CodimInterval{std::nullopt, checked_sub(1, chi)};
}

QuadricTable quadric_strata(i64 n) {
    if (n < 2)
        throw invalid_input("quadric stratification needs n >= 2");
    const Surface s = Surface::hirzebruch(0);
    const ChernData cd{2, DivisorClass(0, checked_sub(checked_mul(2, n), 1)),
                       checked_mul(2, n)};

    QuadricTable t;
    t.n = n;
    t.chi = chi_sheaf(s, cd);
    t.moduli_dim = moduli_dim(s, cd);
    if (t.chi != 1)
        throw consistency_error("quadric family must have chi = 1");
    const i64 expected_dim = checked_sub(checked_mul(8, n), 3);
    if (t.moduli_dim != expected_dim)
        throw consistency_error("quadric family must have moduli dimension 8n - 3");

    for (i64 k = 1; k <= n; ++k) {
        QuadricRow row;
        row.bn = bn_number(s, cd, k);
        row.known_dim = checked_sub(checked_mul(8, n), checked_add(checked_mul(2, k), 1));
        const i64 kk1 = checked_mul(k, checked_sub(k, 1));
        row.rho_negative_nonempty = kk1 > t.moduli_dim;
        row.dim_exceeds_rho = kk1 > 2 && kk1 < t.moduli_dim;
        t.rows.push_back(row);
    }
    return t;
}

InstantonReport instanton_report(i64 n) {
    if (n < 1)
        throw invalid_input("instanton charge n must be >= 1");
    InstantonReport r;
    r.n = n;
    r.chi = checked_add(checked_mul(-3, n), 11);
    r.moduli_dim = checked_sub(checked_mul(8, n), 11);
    for (i64 k = 1; k <= 3; ++k) {
        const i64 rho =
            checked_sub(r.moduli_dim, checked_mul(k, checked_sub(k, r.chi)));
        r.rows[static_cast<std::size_t>(k - 1)] = InstantonRow{k, rho};
    }
    r.nonempty_ks = {1, 2};
    r.equivalence_checked = n > 13;
    if (r.equivalence_checked) {
        // For n > 13 the non-empty range {1, 2} must coincide with rho >= 0.
        if (r.rows[0].rho < 0 || r.rows[1].rho < 0 || r.rows[2].rho >= 0)
            throw consistency_error("instanton rho sign pattern broke for n > 13");
    }
    return r;
}

} // namespace bnwall
