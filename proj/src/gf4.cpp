#include "gq/gf4.hpp"

namespace gq {

std::ostream& operator<<(std::ostream& os, GF4 a) {
  static constexpr const char* kNames[] = {"0", "1", "w", "w^2"};
  return os << kNames[a.code()];
}

}  // namespace gq
