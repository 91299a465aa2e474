#pragma once

#include "json.hpp"

#include <string>

// Validator for the subset of JSON Schema draft-07 the shipped schemas use:
// type (single or list), enum, required, properties, items, and local
// "#/definitions/..." references.
namespace schema_check {

inline bool type_matches(const nlohmann::json &doc, const std::string &type) {
    if (type == "object")
        return doc.is_object();
    if (type == "array")
        return doc.is_array();
    if (type == "string")
        return doc.is_string();
    if (type == "integer")
        return doc.is_number_integer();
    if (type == "number")
        return doc.is_number();
    if (type == "boolean")
        return doc.is_boolean();
    if (type == "null")
        return doc.is_null();
    return false;
}

inline bool validate_at(const nlohmann::json &doc, const nlohmann::json &schema,
                        const nlohmann::json &root, const std::string &path, std::string &error) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            error = path + ": unsupported $ref " + ref;
            return false;
        }
        const std::string name = ref.substr(prefix.size());
        if (!root.contains("definitions") || !root["definitions"].contains(name)) {
            error = path + ": dangling $ref " + ref;
            return false;
        }
        return validate_at(doc, root["definitions"][name], root, path, error);
    }

    if (schema.contains("type")) {
        const nlohmann::json &t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(doc, t.get<std::string>());
        } else {
            for (const auto &option : t)
                ok = ok || type_matches(doc, option.get<std::string>());
        }
        if (!ok) {
            error = path + ": type mismatch, value " + doc.dump();
            return false;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto &option : schema["enum"])
            ok = ok || doc == option;
        if (!ok) {
            error = path + ": " + doc.dump() + " not in enum";
            return false;
        }
    }

    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto &key : schema["required"])
                if (!doc.contains(key.get<std::string>())) {
                    error = path + ": missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto &[key, sub] : schema["properties"].items())
                if (doc.contains(key) &&
                    !validate_at(doc[key], sub, root, path + "/" + key, error))
                    return false;
    }

    if (doc.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < doc.size(); ++i)
            if (!validate_at(doc[i], schema["items"], root, path + "/" + std::to_string(i), error))
                return false;
    }

    return true;
}

inline bool validate(const nlohmann::json &doc, const nlohmann::json &schema, std::string &error) {
    return validate_at(doc, schema, schema, "#", error);
}

} // namespace schema_check
