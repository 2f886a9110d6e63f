#pragma once

namespace betamom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace betamom
