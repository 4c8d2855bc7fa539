#pragma once

#include <string>
#include <vector>

#include "nlmf/experiment.hpp"

namespace nlmf {

// Named comparison presets. Each is sugar over an ordinary config; the same
// text ships under configs/<name>.json.
const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
const std::string& preset_config_text(const std::string& name);
ExperimentConfig preset_config(const std::string& name);

// Algorithms compared by `compare --preset <name>`, in output order.
std::vector<Algorithm> preset_roster(const std::string& name);

}  // namespace nlmf
