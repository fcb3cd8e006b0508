#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hapdc/scenarios.hpp"

namespace hapdc {

// Full run configuration. Every field has a default; a config file only
// overrides what it names. Unknown keys are rejected.
struct RunConfig {
    std::uint64_t seed = 42;
    SystemConfig sys;
    Scenario scenario;
    DelayStudy delay;
};

// Parses and validates a JSON config document. `source` names the input for
// error messages. `overrides` are dotted-path assignments like
// "hap.wind_speed_mps=5"; values parse as JSON literals. An empty or
// whitespace-only document yields all defaults.
RunConfig load_config_text(const std::string& text, const std::string& source,
                           const std::vector<std::string>& overrides = {});

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

// Serializes the effective config; reloading the dump reproduces the config
// exactly.
std::string dump_config(const RunConfig& cfg);

void validate(const RunConfig& cfg);

}  // namespace hapdc
