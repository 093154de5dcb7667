#pragma once

#include <string>

namespace uavnet {

/// Doubles in CSV output use 17 significant digits so parsing them back
/// reproduces the exact bit pattern.
std::string format_double(double v);

} // namespace uavnet
