#pragma once

#include <string>

#include "json.hpp"

#include "apt/pipeline.hpp"

namespace apt {

// Flat key=value run configuration ('#' starts a comment). Unknown keys are
// rejected with the offending key named. The full key set is documented in
// the README.
PipelineConfig parse_config_text(const std::string& text);
PipelineConfig parse_config_file(const std::string& path);
void apply_override(PipelineConfig& config, const std::string& key, const std::string& value);

nlohmann::json config_to_json(const PipelineConfig& config);
nlohmann::json report_to_json(const RunReport& report);

// Writes via a temp file + rename so a crash never leaves a torn file.
void atomic_write_text(const std::string& path, const std::string& text);

}  // namespace apt
