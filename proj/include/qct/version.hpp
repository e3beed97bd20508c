#pragma once

namespace qct {

inline constexpr const char* version = "0.1.0";

} // namespace qct
