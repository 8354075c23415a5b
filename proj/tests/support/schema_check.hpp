#pragma once

// Validator for the conservative JSON-Schema subset used by the published
// schemas: type, properties, required, additionalProperties (boolean),
// items (single schema), enum, minItems, minimum.

#include <string>

#include "json.hpp"

namespace schemacheck {

using nlohmann::json;

inline bool validate(const json& schema, const json& value, std::string& error,
                     const std::string& path = "$") {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        bool ok = (type == "object" && value.is_object()) ||
                  (type == "array" && value.is_array()) ||
                  (type == "string" && value.is_string()) ||
                  (type == "integer" && value.is_number_integer()) ||
                  (type == "number" && value.is_number()) ||
                  (type == "boolean" && value.is_boolean());
        if (!ok) {
            error = path + ": expected " + type;
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& option : schema["enum"])
            if (option == value) found = true;
        if (!found) {
            error = path + ": value not in enum";
            return false;
        }
    }
    if (schema.contains("minimum") && value.is_number()) {
        if (value.get<double>() < schema["minimum"].get<double>()) {
            error = path + ": below minimum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    error = path + ": missing required key " + key.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        const bool allow_extra = schema.value("additionalProperties", true);
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!validate(props[key], sub, error, path + "." + key)) return false;
            } else if (!allow_extra) {
                error = path + ": unexpected key " + key;
                return false;
            } else if (schema.contains("patternValueSchema")) {
                // schema applied to every non-listed property value
                if (!validate(schema["patternValueSchema"], sub, error, path + "." + key))
                    return false;
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema["minItems"].get<std::size_t>()) {
            error = path + ": too few items";
            return false;
        }
        if (schema.contains("items")) {
            std::size_t i = 0;
            for (const auto& item : value) {
                if (!validate(schema["items"], item, error,
                              path + "[" + std::to_string(i) + "]"))
                    return false;
                ++i;
            }
        }
    }
    return true;
}

}  // namespace schemacheck
