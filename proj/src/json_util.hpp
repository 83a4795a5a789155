#pragma once

// Shared helpers for reading the JSON documents the library accepts.

#include <string>
#include <string_view>

#include <json.hpp>

#include "fusionrank/errors.hpp"

namespace fusionrank::detail {

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON: " + std::string(e.what()), line, column);
    }
}

inline const nlohmann::json& require(const nlohmann::json& object, const char* key,
                                     const std::string& where) {
    if (!object.is_object()) throw ParseError(where + ": expected an object");
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(where + ": missing required key \"" + key + "\"");
    return *it;
}

inline std::string require_string(const nlohmann::json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(where + ": expected a string");
    return value.get<std::string>();
}

inline std::int64_t require_integer(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
    return value.get<std::int64_t>();
}

inline const nlohmann::json& require_array(const nlohmann::json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError(where + ": expected an array");
    return value;
}

}  // namespace fusionrank::detail
