#pragma once

namespace cartan3 {

inline constexpr const char* kVersion = "cartan3 0.1.0";

}
