#pragma once

#include <stdexcept>
#include <string>

namespace nlmf {

// Invalid or inconsistent experiment configuration (bad file, unknown preset,
// missing topology, ...). The message carries the offending field path, or a
// file:line:col anchor for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlmf
