#pragma once

#include <cstdint>

namespace zbeta {

// Register / strand label. PD edge labels are used directly.
using Label = std::uint32_t;

}  // namespace zbeta
