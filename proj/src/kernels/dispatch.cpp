#include <cstdlib>
#include <string>

#include "bridgecancel/kernels.hpp"

namespace bridgecancel::kernels {

namespace {

struct Table {
  Isa isa;
  std::size_t (*common_prefix_length)(std::span<const std::int8_t>, std::span<const std::int8_t>);
  std::size_t (*intersection_count)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
};

Table select() {
  const char* forced = std::getenv("BRIDGE_CANCEL_SIMD");
  const bool scalar_only = forced != nullptr && std::string(forced) == "scalar";
#if defined(BRIDGECANCEL_HAVE_AVX2)
  if (!scalar_only && isa_available(Isa::avx2)) {
    return {Isa::avx2, &avx2::common_prefix_length, &avx2::intersection_count};
  }
#else
  (void)scalar_only;
#endif
  return {Isa::scalar, &scalar::common_prefix_length, &scalar::intersection_count};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(BRIDGECANCEL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return table().isa; }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::size_t common_prefix_length(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  return table().common_prefix_length(a, b);
}

std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return table().intersection_count(a, b);
}

}  // namespace bridgecancel::kernels
