#pragma once

#include <cstddef>

namespace orthogeo {

// ORTHOGEO_SIZE_CAP, when set to a positive integer, replaces every
// enumeration cap.
std::size_t effective_cap(std::size_t default_cap);

}  // namespace orthogeo
