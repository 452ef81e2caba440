#pragma once

namespace fdns {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace fdns
