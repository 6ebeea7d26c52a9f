#pragma once

namespace rog {

inline constexpr const char* kToolName = "rog";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rog
