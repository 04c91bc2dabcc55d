#include "table.hpp"

#include <sstream>

namespace bnwall::cli {

namespace {

bool is_fraction(const ordered_json& j) {
    return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

std::string scalar_text(const ordered_json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (is_fraction(j)) {
        const ordered_json& den = j.at("den");
        if (den.is_number_integer() && den.get<long long>() == 1) return j.at("num").dump();
        return j.at("num").dump() + "/" + den.dump();
    }
    return j.dump(); // numbers, booleans, null, flat arrays
}

bool is_flat(const ordered_json& j) {
    if (!j.is_structured()) return true;
    if (j.is_object()) return is_fraction(j);
    for (const auto& child : j)
        if (child.is_structured()) return false;
    return true; // array of scalars
}

bool is_uniform_object_array(const ordered_json& j) {
    if (!j.is_array() || j.empty()) return false;
    if (!j.front().is_object()) return false;
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.front().items()) {
        (void)v;
        keys.push_back(k);
    }
    for (const auto& row : j) {
        if (!row.is_object() || row.size() != keys.size()) return false;
        std::size_t i = 0;
        for (const auto& [k, v] : row.items()) {
            (void)v;
            if (k != keys[i++]) return false;
        }
    }
    return true;
}

void render_columns(std::ostream& os, const ordered_json& rows,
                    const std::string& indent) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) {
        (void)v;
        keys.push_back(k);
    }
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        std::size_t c = 0;
        for (const auto& [k, v] : row.items()) {
            (void)k;
            line.push_back(scalar_text(v));
            width[c] = std::max(width[c], line.back().size());
            ++c;
        }
        cells.push_back(std::move(line));
    }
    const auto emit = [&](const std::vector<std::string>& line) {
        os << indent;
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size())
                os << std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << "\n";
    };
    emit(keys);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < keys.size(); ++c)
        rule.push_back(std::string(width[c], '-'));
    emit(rule);
    for (const auto& line : cells) emit(line);
}

void render_node(std::ostream& os, const std::string& label, const ordered_json& j,
                 int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (is_flat(j)) {
        os << indent << label << " = " << scalar_text(j) << "\n";
        return;
    }
    if (is_uniform_object_array(j)) {
        os << indent << label << ":\n";
        render_columns(os, j, indent + "  ");
        return;
    }
    os << indent << label << ":\n";
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_node(os, k, v, depth + 1);
    } else {
        std::size_t i = 0;
        for (const auto& v : j) render_node(os, "[" + std::to_string(i++) + "]", v, depth + 1);
    }
}

} // namespace

std::string render_table(const ordered_json& envelope) {
    std::ostringstream os;
    os << "command: " << envelope.at("command").get<std::string>() << " (version "
       << envelope.at("version").get<std::string>() << ")\n";
    render_node(os, "inputs", envelope.at("inputs"), 0);
    render_node(os, "result", envelope.at("result"), 0);
    const auto& warnings = envelope.at("warnings");
    if (warnings.empty()) {
        os << "warnings: none\n";
    } else {
        os << "warnings:\n";
        for (const auto& w : warnings) os << "  ! " << w.get<std::string>() << "\n";
    }
    return os.str();
}

} // namespace bnwall::cli
