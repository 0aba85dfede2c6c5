#pragma once

#include "ulearn/experiments.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ulearn {

/// Raised for unreadable, unparsable, or semantically invalid config files.
/// The message carries "<name>:<line>:" for parse errors and the offending
/// field path for validation errors.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates a JSON experiment config file.
ExperimentConfig load_config(const std::string& path);

/// Same, from in-memory text; `name` is used in diagnostics.
ExperimentConfig parse_config(const std::string& text, const std::string& name);

/// Fully resolved echo of a config (defaults filled in); parsing it back
/// reproduces the same run.
nlohmann::json config_to_json(const ExperimentConfig& config);

}  // namespace ulearn
