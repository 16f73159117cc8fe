#include "boolpso/rng.hpp"

#include <stdexcept>

namespace boolpso {

std::size_t RngStream::uniform_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index needs a positive bound");
  const std::uint64_t b = bound;
  // Rejection keeps the draw unbiased: accept only below the largest multiple of b.
  const std::uint64_t limit = -b % b;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r < limit);
  return static_cast<std::size_t>(r % b);
}

}  // namespace boolpso
