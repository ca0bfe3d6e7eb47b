#pragma once

namespace catconv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catconv
