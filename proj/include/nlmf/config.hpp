#pragma once

#include <string>
#include <vector>

#include "nlmf/errors.hpp"
#include "nlmf/experiment.hpp"

namespace nlmf {

// Parses and fully validates a JSON config. Throws ConfigError listing every
// violation by field path; syntax errors are anchored origin:line:col.
ExperimentConfig load_config_text(const std::string& text,
                                  const std::string& origin);
ExperimentConfig load_config_file(const std::string& path);

// Parses, then returns the semantic violations (empty means valid) instead of
// throwing on them. Syntax and shape problems still throw. On success the
// resolved config is stored in *out when non-null.
std::vector<std::string> check_config_text(const std::string& text,
                                           const std::string& origin,
                                           ExperimentConfig* out);

// Canonical JSON echo of the fully resolved config.
std::string config_to_json_text(const ExperimentConfig& cfg);

// Flat key-value reproducibility record. config_from_manifest() inverts it,
// so the manifest alone is enough to regenerate a result file byte-for-byte.
std::string manifest_text(const ExperimentConfig& cfg, const std::string& command,
                          double wall_seconds);
ExperimentConfig config_from_manifest(const std::string& text);

}  // namespace nlmf
