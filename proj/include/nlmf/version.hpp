#pragma once

namespace nlmf {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace nlmf
