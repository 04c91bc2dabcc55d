#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "bnwall/brill_noether.hpp"
#include "bnwall/cohomology.hpp"
#include "bnwall/crossing.hpp"
#include "bnwall/errors.hpp"
#include "bnwall/picard.hpp"
#include "bnwall/stability.hpp"
#include "bnwall/walls.hpp"
#include "json_out.hpp"
#include "svg.hpp"
#include "table.hpp"

namespace bnwall::cli {
namespace {

using nlohmann::ordered_json;

i64 parse_i64(std::string_view text, const std::string& what) {
    i64 value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw invalid_input("cannot parse integer '" + std::string(text) + "' for " + what);
    }
    return value;
}

std::vector<i64> parse_coords(std::string_view text, const std::string& what) {
    std::vector<i64> coords;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece =
            text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        coords.push_back(parse_i64(piece, what));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return coords;
}

DivisorClass parse_divisor(const Surface& s, std::string_view text, const std::string& what) {
    const std::vector<i64> coords = parse_coords(text, what);
    if (coords.size() != static_cast<std::size_t>(s.picard_rank())) {
        throw invalid_input(what + " '" + std::string(text) + "' has " +
                            std::to_string(coords.size()) + " coordinates; " + s.name() +
                            " needs " + std::to_string(s.picard_rank()));
    }
    if (coords.size() == 1) {
        return DivisorClass(coords[0]);
    }
    return DivisorClass(coords[0], coords[1]);
}

// Surface selection shared by most subcommands: either a name (f0, f1, ...,
// p2) or a bare Hirzebruch invariant via --e. Exactly one must be given.
struct SurfacePick {
    std::string name;
    std::optional<i64> e;

    void attach(CLI::App* cmd) {
        cmd->add_option("--surface", name, "surface name: f0, f1, f2, ... or p2");
        cmd->add_option("--e", e, "Hirzebruch invariant; shorthand for --surface fE");
    }

    Surface resolve() const {
        if (!name.empty() && e.has_value()) {
            throw invalid_input("give either --surface or --e, not both");
        }
        if (name.empty() && !e.has_value()) {
            throw invalid_input("choose a surface with --surface or --e");
        }
        if (e.has_value()) {
            return Surface::hirzebruch(*e);
        }
        if (name == "p2" || name == "P2") {
            return Surface::projective_plane();
        }
        if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
            return Surface::hirzebruch(parse_i64(std::string_view(name).substr(1), "--surface"));
        }
        throw invalid_input("unknown surface '" + name + "'; use f0, f1, ... or p2");
    }
};

ZModel parse_zmodel(const Surface& s, i64 length, const std::vector<std::string>& specs) {
    ZModel z = ZModel::generic(length);
    for (const std::string& spec : specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos) {
            throw invalid_input("override '" + spec + "' must look like a,b=h0");
        }
        const DivisorClass twist =
            parse_divisor(s, std::string_view(spec).substr(0, eq), "--override twist");
        const i64 sections = parse_i64(std::string_view(spec).substr(eq + 1), "--override value");
        z.overrides[twist] = sections;
    }
    return z;
}

ordered_json overrides_json(const ZModel& z) {
    ordered_json arr = ordered_json::array();
    for (const auto& [twist, sections] : z.overrides) {
        arr.push_back({{"twist", to_json(twist)}, {"h0", sections}});
    }
    return arr;
}

// Everything a callback hands back to the printing code in run_cli.
struct Outcome {
    ordered_json envelope;
    bool ready = false;
};

void deliver(Outcome& outcome, const std::string& command, ordered_json inputs,
             ordered_json result, std::vector<std::string> warnings = {}) {
    outcome.envelope =
        make_envelope(command, std::move(inputs), std::move(result), std::move(warnings));
    outcome.ready = true;
}

void add_chi(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto rank = std::make_shared<i64>(2);
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<i64>(0);
    CLI::App* cmd = app.add_subcommand("chi", "Euler characteristic of a sheaf from Chern data");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--rank", *rank, "sheaf rank")->required();
    cmd->add_option("--c1", *c1, "first Chern class, e.g. 1,0 (or a single integer on p2)")
        ->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->callback([&outcome, opt, rank, c1, c2] {
        const Surface s = opt->resolve();
        const ChernData cd{*rank, parse_divisor(s, *c1, "--c1"), *c2};
        const i64 chi = chi_sheaf(s, cd);
        deliver(outcome, "chi",
                {{"surface", to_json(s)},
                 {"rank", cd.rank},
                 {"c1", to_json(cd.c1)},
                 {"c2", cd.c2}},
                {{"chi", chi}});
    });
}

void add_moduli_dim(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<i64>(0);
    CLI::App* cmd =
        app.add_subcommand("moduli-dim", "expected dimension of the rank-2 moduli space");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--c1", *c1, "first Chern class")->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->callback([&outcome, opt, c1, c2] {
        const Surface s = opt->resolve();
        const ChernData cd{2, parse_divisor(s, *c1, "--c1"), *c2};
        const i64 dim = moduli_dim(s, cd);
        deliver(outcome, "moduli-dim",
                {{"surface", to_json(s)},
                 {"rank", cd.rank},
                 {"c1", to_json(cd.c1)},
                 {"c2", cd.c2}},
                {{"dim", dim}});
    });
}

void add_bn(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<i64>(0);
    auto k = std::make_shared<i64>(0);
    CLI::App* cmd = app.add_subcommand("bn", "Brill-Noether number of a rank-2 stratum");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--c1", *c1, "first Chern class")->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->add_option("--k", *k, "required number of sections")->required();
    cmd->callback([&outcome, opt, c1, c2, k] {
        const Surface s = opt->resolve();
        const ChernData cd{2, parse_divisor(s, *c1, "--c1"), *c2};
        const BNRecord rec = bn_number(s, cd, *k);
        deliver(outcome, "bn",
                {{"surface", to_json(s)},
                 {"rank", cd.rank},
                 {"c1", to_json(cd.c1)},
                 {"c2", cd.c2},
                 {"k", *k}},
                to_json(rec));
    });
}

void add_bn_defined(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto rank = std::make_shared<i64>(2);
    auto c1 = std::make_shared<std::string>();
    auto pol = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand(
        "bn-defined", "check the slope hypothesis that makes Brill-Noether loci determinantal");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--rank", *rank, "sheaf rank")->required();
    cmd->add_option("--c1", *c1, "first Chern class")->required();
    cmd->add_option("--H", *pol, "ample polarization")->required();
    cmd->callback([&outcome, opt, rank, c1, pol] {
        const Surface s = opt->resolve();
        const DivisorClass first = parse_divisor(s, *c1, "--c1");
        const DivisorClass h = parse_divisor(s, *pol, "--H");
        const BnDefinedCheck check = bn_defined(s, h, *rank, first);
        std::vector<std::string> warnings;
        if (check.equality) {
            warnings.push_back(
                "slope hypothesis holds with equality; strictly larger slopes are needed for "
                "the determinantal description");
        }
        deliver(outcome, "bn-defined",
                {{"surface", to_json(s)},
                 {"rank", *rank},
                 {"c1", to_json(first)},
                 {"H", to_json(h)}},
                to_json(check), std::move(warnings));
    });
}

void add_gh_bounds(CLI::App& app, Outcome& outcome) {
    auto rank = std::make_shared<i64>(2);
    auto c1 = std::make_shared<i64>(0);
    auto c2 = std::make_shared<i64>(0);
    CLI::App* cmd = app.add_subcommand(
        "gh-bounds", "codimension window for the nonempty Brill-Noether stratum on the plane");
    cmd->fallthrough();
    cmd->add_option("--rank", *rank, "sheaf rank")->required();
    cmd->add_option("--c1", *c1, "first Chern degree")->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->callback([&outcome, rank, c1, c2] {
        const Surface s = Surface::projective_plane();
        const ChernData cd{*rank, DivisorClass(*c1), *c2};
        const CodimInterval bounds = gh_codim_bounds(cd);
        ordered_json result = to_json(bounds);
        result["chi"] = chi_sheaf(s, cd);
        deliver(outcome, "gh-bounds",
                {{"surface", to_json(s)},
                 {"rank", cd.rank},
                 {"c1", to_json(cd.c1)},
                 {"c2", cd.c2}},
                std::move(result));
    });
}

void add_walls(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<i64>(0);
    auto between = std::make_shared<std::vector<std::string>>();
    CLI::App* cmd = app.add_subcommand("walls", "walls of the given Chern type");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--c1", *c1, "first Chern class")->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->add_option("--between", *between,
                    "two ample classes; restrict to walls separating them, oriented toward "
                    "the first")
        ->expected(2);
    cmd->callback([&outcome, opt, c1, c2, between] {
        const Surface s = opt->resolve();
        const DivisorClass first = parse_divisor(s, *c1, "--c1");
        ordered_json inputs = {
            {"surface", to_json(s)}, {"c1", to_json(first)}, {"c2", *c2}};
        std::vector<WallClass> walls;
        if (between->empty()) {
            walls = enumerate_walls(s, first, *c2);
        } else {
            const DivisorClass l1 = parse_divisor(s, (*between)[0], "--between");
            const DivisorClass l2 = parse_divisor(s, (*between)[1], "--between");
            inputs["between"] = ordered_json::array({to_json(l1), to_json(l2)});
            walls = separating_walls(s, first, *c2, l1, l2);
        }
        ordered_json result = ordered_json::array();
        for (const WallClass& w : walls) {
            result.push_back(to_json(w));
        }
        deliver(outcome, "walls", std::move(inputs), std::move(result));
    });
}

void add_cross(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<i64>(0);
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand(
        "cross", "strata exchanged when the polarization moves between two chambers");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--c1", *c1, "first Chern class")->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->add_option("--from", *from, "starting ample polarization")->required();
    cmd->add_option("--to", *to, "ending ample polarization")->required();
    cmd->callback([&outcome, opt, c1, c2, from, to] {
        const Surface s = opt->resolve();
        const DivisorClass first = parse_divisor(s, *c1, "--c1");
        const DivisorClass l_from = parse_divisor(s, *from, "--from");
        const DivisorClass l_to = parse_divisor(s, *to, "--to");
        const CrossingReport report = crossing_report(s, first, *c2, l_from, l_to);
        deliver(outcome, "cross",
                {{"surface", to_json(s)},
                 {"c1", to_json(first)},
                 {"c2", *c2},
                 {"from", to_json(l_from)},
                 {"to", to_json(l_to)}},
                to_json(report));
    });
}

void add_hirzebruch(CLI::App& app, Outcome& outcome) {
    auto e = std::make_shared<i64>(0);
    auto alpha = std::make_shared<i64>(0);
    auto c2 = std::make_shared<i64>(0);
    auto n = std::make_shared<i64>(0);
    CLI::App* cmd = app.add_subcommand(
        "hirzebruch", "single-wall decomposition along the standard polarization path");
    cmd->fallthrough();
    cmd->add_option("--e", *e, "Hirzebruch invariant")->required();
    cmd->add_option("--alpha", *alpha, "fibre degree of c1: c1 = (1, alpha) with alpha 0 or 1")
        ->required();
    cmd->add_option("--c2", *c2, "second Chern class, at least 2")->required();
    cmd->add_option("--n", *n, "wall index, between 1 and c2-1")->required();
    cmd->callback([&outcome, e, alpha, c2, n] {
        const HirzebruchScenario sc = hirzebruch_scenario(*e, *alpha, *c2, *n);
        std::vector<std::string> warnings;
        if (!sc.extra_separating.empty()) {
            warnings.push_back(
                "the straight path from L_n to L_next also crosses " +
                std::to_string(sc.extra_separating.size()) +
                " wall(s) on other rays (see extra_separating); the two-term "
                "decomposition omits their families");
        }
        deliver(outcome, "hirzebruch",
                {{"e", *e}, {"alpha", *alpha}, {"c2", *c2}, {"n", *n}}, to_json(sc),
                std::move(warnings));
    });
}

void add_quadric(CLI::App& app, Outcome& outcome) {
    auto n = std::make_shared<i64>(0);
    CLI::App* cmd = app.add_subcommand(
        "quadric", "Brill-Noether table for the standard odd family on the quadric");
    cmd->fallthrough();
    cmd->add_option("--n", *n, "family parameter, at least 2")->required();
    cmd->callback([&outcome, n] {
        const QuadricTable table = quadric_strata(*n);
        deliver(outcome, "quadric", {{"n", *n}}, to_json(table));
    });
}

void add_instanton(CLI::App& app, Outcome& outcome) {
    auto n = std::make_shared<i64>(0);
    CLI::App* cmd =
        app.add_subcommand("instanton", "Brill-Noether numbers for instanton bundles");
    cmd->fallthrough();
    cmd->add_option("--n", *n, "charge, at least 1")->required();
    cmd->callback([&outcome, n] {
        const InstantonReport report = instanton_report(*n);
        deliver(outcome, "instanton", {{"n", *n}}, to_json(report));
    });
}

void add_stability(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto pol = std::make_shared<std::string>();
    auto sub = std::make_shared<std::string>();
    auto c1 = std::make_shared<std::string>();
    auto length = std::make_shared<i64>(0);
    auto overrides = std::make_shared<std::vector<std::string>>();
    CLI::App* cmd = app.add_subcommand(
        "stability", "destabilizers and section counts for an extension of a line bundle by "
                     "a twisted ideal sheaf");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--L", *pol, "ample polarization")->required();
    cmd->add_option("--D", *sub, "sub line bundle class")->required();
    cmd->add_option("--c1", *c1, "first Chern class of the extension")->required();
    cmd->add_option("--length", *length, "length of the twisting cycle")->required();
    cmd->add_option("--override", *overrides,
                    "pin h0 of the twisted ideal at one twist, as a,b=h0; repeatable");
    cmd->callback([&outcome, opt, pol, sub, c1, length, overrides] {
        const Surface s = opt->resolve();
        const DivisorClass l = parse_divisor(s, *pol, "--L");
        const ExtensionData data{parse_divisor(s, *sub, "--D"),
                                 parse_divisor(s, *c1, "--c1"),
                                 parse_zmodel(s, *length, *overrides)};
        const i64 c2 = implied_c2(s, data);
        const std::vector<Destabilizer> found = destabilizers(s, l, data);
        const SectionCount h0 = h0_bundle(s, data);
        ordered_json rows = ordered_json::array();
        for (const Destabilizer& d : found) {
            rows.push_back(to_json(d));
        }
        std::vector<std::string> warnings;
        if (!h0.exact()) {
            warnings.push_back("h0 of the extension is only pinned to a window; the sub line "
                               "bundle has h1 > 0");
        }
        deliver(outcome, "stability",
                {{"surface", to_json(s)},
                 {"L", to_json(l)},
                 {"D", to_json(data.sub)},
                 {"c1", to_json(data.c1)},
                 {"length", data.z.length},
                 {"overrides", overrides_json(data.z)}},
                {{"c2", c2},
                 {"stable", found.empty()},
                 {"destabilizers", std::move(rows)},
                 {"h0", to_json(h0)}},
                std::move(warnings));
    });
}

void add_cone_svg(CLI::App& app, Outcome& outcome) {
    auto opt = std::make_shared<SurfacePick>();
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<i64>(0);
    auto pols = std::make_shared<std::vector<std::string>>();
    auto out_path = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand(
        "cone-svg", "draw the ample cone with the walls of a Chern type as an SVG file");
    cmd->fallthrough();
    opt->attach(cmd);
    cmd->add_option("--c1", *c1, "first Chern class")->required();
    cmd->add_option("--c2", *c2, "second Chern class")->required();
    cmd->add_option("--pol", *pols, "ample class to mark; repeatable");
    cmd->add_option("--out", *out_path, "output SVG path")->required();
    cmd->callback([&outcome, opt, c1, c2, pols, out_path] {
        const Surface s = opt->resolve();
        const DivisorClass first = parse_divisor(s, *c1, "--c1");
        std::vector<DivisorClass> marks;
        marks.reserve(pols->size());
        for (const std::string& text : *pols) {
            marks.push_back(parse_divisor(s, text, "--pol"));
        }
        const ConeSvg svg = cone_svg(s, first, *c2, marks);
        std::ofstream file(*out_path, std::ios::binary);
        if (!file) {
            throw invalid_input("cannot open '" + *out_path + "' for writing");
        }
        file << svg.document;
        file.close();
        if (!file) {
            throw invalid_input("failed writing '" + *out_path + "'");
        }
        ordered_json marks_json = ordered_json::array();
        for (const DivisorClass& m : marks) {
            marks_json.push_back(to_json(m));
        }
        deliver(outcome, "cone-svg",
                {{"surface", to_json(s)},
                 {"c1", to_json(first)},
                 {"c2", *c2},
                 {"pol", std::move(marks_json)},
                 {"out", *out_path}},
                {{"path", *out_path},
                 {"wall_count", svg.wall_count},
                 {"bytes", static_cast<i64>(svg.document.size())}});
    });
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Brill-Noether and wall-crossing numerology for rank-2 bundles on "
                 "Hirzebruch surfaces",
                 "bnwall"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    Outcome outcome;
    add_chi(app, outcome);
    add_moduli_dim(app, outcome);
    add_bn(app, outcome);
    add_bn_defined(app, outcome);
    add_gh_bounds(app, outcome);
    add_walls(app, outcome);
    add_cross(app, outcome);
    add_hirzebruch(app, outcome);
    add_quadric(app, outcome);
    add_instanton(app, outcome);
    add_stability(app, outcome);
    add_cone_svg(app, outcome);

    try {
        // CLI11 consumes the argument vector back to front.
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& ex) {
        const int rc = app.exit(ex, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const invalid_input& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const consistency_error& ex) {
        err << "consistency error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 2;
    }

    if (!outcome.ready) {
        err << "internal error: subcommand produced no output\n";
        return 2;
    }
    try {
        if (format == "table") {
            check_json_safe(outcome.envelope);
            out << render_table(outcome.envelope);
        } else {
            out << dump_envelope(outcome.envelope);
        }
    } catch (const consistency_error& ex) {
        err << "consistency error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace bnwall::cli
