#pragma once

namespace hamlab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hamlab
