#pragma once

namespace rmx {
inline constexpr const char* kVersion = "0.1.0";
}
