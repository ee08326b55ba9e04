#pragma once

namespace highway {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace highway
