#pragma once

namespace magemit {

inline constexpr const char* tool_name = "magemit";
inline constexpr const char* tool_version = "0.1.0";

} // namespace magemit
