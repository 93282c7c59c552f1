#pragma once

namespace meanforge {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace meanforge
