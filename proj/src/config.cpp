#include "orthogeo/config.hpp"

#include <cstdlib>
#include <string>

namespace orthogeo {

std::size_t effective_cap(std::size_t default_cap) {
  const char* env = std::getenv("ORTHOGEO_SIZE_CAP");
  if (!env || !*env) return default_cap;
  try {
    long long v = std::stoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  } catch (...) {
  }
  return default_cap;
}

}  // namespace orthogeo
