#pragma once

namespace pwgs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pwgs
