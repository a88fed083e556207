#pragma once

namespace treeph {

inline constexpr const char* kVersion = "0.1.0";

} // namespace treeph
