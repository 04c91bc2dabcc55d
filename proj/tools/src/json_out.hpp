#pragma once

// JSON views of the core types and the output envelope shared by every
// subcommand. Field names here are the documented interface; see
// docs/schema/. Insertion order is preserved so byte output is deterministic.

#include <string>
#include <vector>

#include <json.hpp>

#include "bnwall/brill_noether.hpp"
#include "bnwall/cohomology.hpp"
#include "bnwall/crossing.hpp"
#include "bnwall/stability.hpp"
#include "bnwall/walls.hpp"

namespace bnwall::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

ordered_json to_json(const DivisorClass& d);
ordered_json to_json(const Surface& s);
ordered_json to_json(const CohomologyTriple& t);
ordered_json to_json(const Rational& r);
ordered_json to_json(const BNRecord& r);
ordered_json to_json(const CodimInterval& ci);
ordered_json to_json(const BnDefinedCheck& c);
ordered_json to_json(const WallClass& w);
ordered_json to_json(const ExtFamily& f);
ordered_json to_json(const BNIdentification& id);
ordered_json to_json(const CrossingReport& rep);
ordered_json to_json(const HirzebruchScenario& sc);
ordered_json to_json(const QuadricTable& t);
ordered_json to_json(const InstantonReport& r);
ordered_json to_json(const Destabilizer& d);
ordered_json to_json(const SectionCount& c);

// Envelope carried by every successful invocation.
ordered_json make_envelope(const std::string& command, ordered_json inputs,
                           ordered_json result, std::vector<std::string> warnings);

// Every integer in the tree must be exactly representable in a double
// (|v| <= 2^53), so downstream JSON consumers cannot silently lose digits.
// Violations raise consistency_error.
void check_json_safe(const ordered_json& j);

// Canonical byte rendering: two-space indent, trailing newline.
std::string dump_envelope(const ordered_json& env);

} // namespace bnwall::cli
