#include "latmon/report.hpp"

namespace latmon {

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["trials"] = trials;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
        j["failures"].push_back({{"trial", f.trial},
                                 {"seed", f.seed},
                                 {"description", f.description},
                                 {"witness", f.witness}});
    }
    j["values"] = values;
    j["elapsed_ms"] = elapsed_ms;
    j["pass"] = pass();
    return j;
}

namespace {

bool type_matches(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    return true;
}

bool validate_node(const nlohmann::json& value, const nlohmann::json& schema, std::string path,
                   std::string* error) {
    if (schema.contains("type")) {
        if (!type_matches(value, schema["type"].get<std::string>())) {
            if (error) *error = path + ": expected type " + schema["type"].get<std::string>();
            return false;
        }
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                if (error) *error = path + ": missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key)) {
                if (!validate_node(value[key], sub, path + "/" + key, error)) return false;
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        int i = 0;
        for (const auto& item : value) {
            if (!validate_node(item, schema["items"], path + "[" + std::to_string(i) + "]", error))
                return false;
            ++i;
        }
    }
    return true;
}

} // namespace

bool validate_report_json(const nlohmann::json& report, const nlohmann::json& schema,
                          std::string* error) {
    return validate_node(report, schema, "", error);
}

} // namespace latmon
