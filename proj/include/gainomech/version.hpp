#pragma once

namespace gainomech {

inline constexpr const char* version = "0.1.0";

} // namespace gainomech
