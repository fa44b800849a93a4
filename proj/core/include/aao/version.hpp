#pragma once

namespace aao {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aao
