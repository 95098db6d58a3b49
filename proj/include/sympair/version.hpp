#pragma once

namespace sympair {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sympair
