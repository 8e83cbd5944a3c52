#pragma once

namespace grushin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace grushin
