#pragma once

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace gaut {

struct SourcePosition {
    std::size_t line = 0;
    std::size_t column = 0;
};

/// Parsed key/value document.
struct ConfigDocument {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    std::map<std::string, SourcePosition> positions; // dotted key -> position of its value
};

/// Reads the TOML subset used by problem files: comments, `[table]` headers,
/// `key = value` with integers, booleans, basic strings and (nested,
/// multi-line) arrays. Throws ParseError with line and column.
ConfigDocument parseConfigText(std::string_view text);

} // namespace gaut
