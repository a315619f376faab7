#pragma once

namespace ggfnsp {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ggfnsp
