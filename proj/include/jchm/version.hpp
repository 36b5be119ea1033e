#pragma once

namespace jchm {
inline constexpr const char* kVersion = "0.1.0";
}
