#pragma once

namespace kt {

inline constexpr const char* version = "1.0.0";

} // namespace kt
