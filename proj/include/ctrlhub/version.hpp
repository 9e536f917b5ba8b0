#pragma once

#include <string_view>

namespace ctrlhub {

inline constexpr std::string_view tool_name = "ctrlhub";
inline constexpr std::string_view tool_version = "0.1.0";

}  // namespace ctrlhub
