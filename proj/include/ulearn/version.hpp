#pragma once

namespace ulearn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ulearn
