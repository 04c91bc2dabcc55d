#include "json_out.hpp"

namespace bnwall::cli {

ordered_json to_json(const DivisorClass& d) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < d.rank(); ++i) a.push_back(d[i]);
    return a;
}

ordered_json to_json(const Surface& s) {
    ordered_json j;
    j["kind"] = s.is_hirzebruch() ? "hirzebruch" : "projective-plane";
    if (s.is_hirzebruch()) j["e"] = s.e();
    return j;
}

ordered_json to_json(const CohomologyTriple& t) {
    return ordered_json{{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"chi", t.chi()}};
}

ordered_json to_json(const Rational& r) {
    return ordered_json{{"num", r.num}, {"den", r.den}};
}

ordered_json to_json(const BNRecord& r) {
    return ordered_json{
        {"k", r.k}, {"chi", r.chi}, {"moduli_dim", r.moduli_dim}, {"rho", r.rho}};
}

ordered_json to_json(const CodimInterval& ci) {
    ordered_json j;
    j["lower"] = ci.lower ? ordered_json(*ci.lower) : ordered_json(nullptr);
    j["upper"] = ci.upper;
    return j;
}

ordered_json to_json(const BnDefinedCheck& c) {
    return ordered_json{{"defined", c.defined}, {"equality", c.equality}};
}

ordered_json to_json(const WallClass& w) {
    return ordered_json{
        {"xi", to_json(w.xi)}, {"xi_sq", w.xi_sq}, {"length", w.length}};
}

ordered_json to_json(const ExtFamily& f) {
    return ordered_json{{"xi", to_json(f.xi.xi)},
                        {"sub_divisor", to_json(f.sub_divisor)},
                        {"length", f.length},
                        {"dim", f.dim}};
}

ordered_json to_json(const BNIdentification& id) {
    return ordered_json{{"family_xi", to_json(id.xi)},
                        {"c1", to_json(id.c1)},
                        {"c2", id.c2},
                        {"k", id.k},
                        {"polarization", to_json(id.polarization)},
                        {"rho", id.rho},
                        {"family_dim", id.family_dim},
                        {"matched", id.matched}};
}

ordered_json to_json(const CrossingReport& rep) {
    ordered_json j;
    j["from"] = to_json(rep.from_pol);
    j["to"] = to_json(rep.to_pol);
    j["assumed_sub_sections"] = kGenericSubSections;
    j["removed"] = ordered_json::array();
    for (const ExtFamily& f : rep.removed) j["removed"].push_back(to_json(f));
    j["added"] = ordered_json::array();
    for (const ExtFamily& f : rep.added) j["added"].push_back(to_json(f));
    j["bn_identifications"] = ordered_json::array();
    for (const BNIdentification& id : rep.identifications)
        j["bn_identifications"].push_back(to_json(id));
    return j;
}

ordered_json to_json(const HirzebruchScenario& sc) {
    ordered_json j;
    j["e"] = sc.e;
    j["alpha"] = sc.alpha;
    j["c2"] = sc.c2;
    j["n"] = sc.n;
    j["c1"] = to_json(sc.c1);
    j["L_n"] = to_json(sc.L_n);
    j["L_next"] = to_json(sc.L_next);
    j["xi_n"] = to_json(sc.xi_n);
    j["wall_unique"] = sc.wall_unique;
    j["extra_separating"] = ordered_json::array();
    for (const WallClass& w : sc.extra_separating) {
        j["extra_separating"].push_back(to_json(w));
    }
    j["c1_tilde"] = to_json(sc.c1_tilde);
    j["c1_bar"] = to_json(sc.c1_bar);
    j["defined_tilde"] = to_json(sc.defined_tilde);
    j["defined_bar"] = to_json(sc.defined_bar);
    j["assumed_sub_sections"] = kGenericSubSections;
    j["removed"] = to_json(sc.removed);
    j["added"] = to_json(sc.added);
    j["rho_tilde"] = sc.rho_tilde;
    j["rho_bar"] = sc.rho_bar;
    j["dim_match_added"] = sc.dim_match_added;
    j["dim_match_removed"] = sc.dim_match_removed;
    j["decomposition"] = sc.decomposition;
    return j;
}

ordered_json to_json(const QuadricTable& t) {
    ordered_json j;
    j["n"] = t.n;
    j["chi"] = t.chi;
    j["moduli_dim"] = t.moduli_dim;
    j["rows"] = ordered_json::array();
    for (const QuadricRow& row : t.rows)
        j["rows"].push_back(ordered_json{
            {"k", row.bn.k},
            {"rho", row.bn.rho},
            {"known_dim", row.known_dim},
            {"rho_negative_nonempty", row.rho_negative_nonempty},
            {"dim_exceeds_rho", row.dim_exceeds_rho}});
    return j;
}

ordered_json to_json(const InstantonReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["chi"] = r.chi;
    j["moduli_dim"] = r.moduli_dim;
    j["rows"] = ordered_json::array();
    for (const InstantonRow& row : r.rows)
        j["rows"].push_back(ordered_json{{"k", row.k}, {"rho", row.rho}});
    j["nonempty"] = r.nonempty_ks;
    j["equivalence_checked"] = r.equivalence_checked;
    return j;
}

ordered_json to_json(const Destabilizer& d) {
    return ordered_json{{"class", to_json(d.cls)},
                        {"route", to_string(d.route)},
                        {"slope_excess", to_json(d.slope_excess)},
                        {"semistable_only", d.semistable_only}};
}

ordered_json to_json(const SectionCount& c) {
    return ordered_json{{"lower", c.lower}, {"upper", c.upper}, {"exact", c.exact()}};
}

ordered_json make_envelope(const std::string& command, ordered_json inputs,
                           ordered_json result, std::vector<std::string> warnings) {
    ordered_json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["result"] = std::move(result);
    env["warnings"] = warnings;
    env["version"] = kVersion;
    return env;
}

void check_json_safe(const ordered_json& j) {
    constexpr std::int64_t kSafe = (std::int64_t{1} << 53);
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v > kSafe || v < -kSafe)
            throw consistency_error("integer " + std::to_string(v) +
                                    " exceeds the 53-bit JSON-safe range");
    } else if (j.is_number_unsigned()) {
        if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(kSafe))
            throw consistency_error("integer exceeds the 53-bit JSON-safe range");
    } else if (j.is_structured()) {
        for (const auto& child : j) check_json_safe(child);
    }
}

std::string dump_envelope(const ordered_json& env) {
    check_json_safe(env);
    return env.dump(2) + "\n";
}

} // namespace bnwall::cli
