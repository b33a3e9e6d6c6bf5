#pragma once

namespace omfwm {
inline constexpr const char* kVersion = "0.1.0";
}
