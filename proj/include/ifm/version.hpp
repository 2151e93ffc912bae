#pragma once

namespace ifm {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ifm
