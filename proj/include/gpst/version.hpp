#pragma once

namespace gpst {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gpst
