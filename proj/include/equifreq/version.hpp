#pragma once

namespace equifreq {

inline constexpr const char* kToolName = "equifreq";
inline constexpr const char* kVersion = "0.1.0";

} // namespace equifreq
