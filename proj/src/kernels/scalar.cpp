#include <algorithm>
#include <bit>

#include "bridgecancel/kernels.hpp"

namespace bridgecancel::kernels::scalar {

std::size_t common_prefix_length(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

}  // namespace bridgecancel::kernels::scalar
