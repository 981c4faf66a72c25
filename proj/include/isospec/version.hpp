#pragma once

#define ISOSPEC_VERSION "0.1.0"

namespace isospec {
inline constexpr const char* version = ISOSPEC_VERSION;
}
