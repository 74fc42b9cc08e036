#pragma once

namespace fraglaw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fraglaw
