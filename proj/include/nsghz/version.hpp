#pragma once

namespace nsghz {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace nsghz
