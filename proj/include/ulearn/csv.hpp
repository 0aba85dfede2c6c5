#pragma once

#include <string>

namespace ulearn {

/// Locale-independent shortest-round-trip text for a double (to_chars), so
/// CSV output is bitwise reproducible. Infinities print as "inf"/"-inf".
std::string format_double(double v);

}  // namespace ulearn
