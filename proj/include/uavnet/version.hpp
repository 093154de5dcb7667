#pragma once

namespace uavnet {

inline constexpr const char* kVersion = "0.1.0";

} // namespace uavnet
