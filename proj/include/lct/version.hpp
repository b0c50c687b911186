#pragma once

namespace lct {

inline constexpr const char* kEngineName = "lct";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace lct
