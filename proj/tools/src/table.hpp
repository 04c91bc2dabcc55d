#pragma once

// Plain-text rendering of an output envelope. Derived entirely from the JSON
// tree, so both formats always agree on every value.

#include <string>

#include "json_out.hpp"

namespace bnwall::cli {

std::string render_table(const ordered_json& envelope);

} // namespace bnwall::cli
