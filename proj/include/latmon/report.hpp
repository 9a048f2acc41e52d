#pragma once

#include "latmon/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace latmon {

// Machine-readable result of one verification suite. Reports are
// reproducible: identical seeds give identical failure lists and values;
// only elapsed_ms varies.
struct SuiteReport {
    struct Failure {
        int trial = 0;
        std::uint64_t seed = 0;
        std::string description;
        nlohmann::json witness;   // suite-specific payload
    };

    std::string suite;
    int trials = 0;
    std::vector<Failure> failures;
    nlohmann::json values = nlohmann::json::object();   // named computed quantities
    std::int64_t elapsed_ms = 0;
    bool pass() const { return failures.empty(); }

    void fail(int trial, std::uint64_t seed, std::string description,
              nlohmann::json witness = nlohmann::json::object()) {
        failures.push_back({trial, seed, std::move(description), std::move(witness)});
    }

    nlohmann::json to_json() const;
};

// Structural validation against the shipped report schema (type / required
// checks for the subset of JSON Schema the file uses).
bool validate_report_json(const nlohmann::json& report, const nlohmann::json& schema,
                          std::string* error = nullptr);

} // namespace latmon
