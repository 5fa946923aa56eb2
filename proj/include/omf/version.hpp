#pragma once

namespace omf {

inline constexpr const char* kToolName = "omf";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace omf
