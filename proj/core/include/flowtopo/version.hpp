#pragma once

namespace flowtopo {

inline constexpr const char* kVersion = "0.1.0";

} // namespace flowtopo
