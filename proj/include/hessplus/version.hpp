#pragma once

namespace hessplus {

inline constexpr const char* kToolName = "hessplus";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hessplus
