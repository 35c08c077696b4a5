#pragma once

namespace gue {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gue
