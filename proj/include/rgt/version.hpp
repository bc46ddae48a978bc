#pragma once

namespace rgt {

inline constexpr const char* kEngineVersion = "rgt 0.1.0";

}  // namespace rgt
