#pragma once

// Byte and bitset inner loops of the small cancellation checks. Each kernel
// has a scalar reference and, on x86-64, an AVX2 variant; the dispatching
// entry points pick one once per process.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace bridgecancel::kernels {

enum class Isa { scalar, avx2 };

/// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);
/// The variant used by the dispatching kernels. AVX2 when available, unless
/// BRIDGE_CANCEL_SIMD=scalar is set in the environment.
Isa active_isa();
std::string_view isa_name(Isa isa);

/// Length of the longest common prefix of a and b.
std::size_t common_prefix_length(std::span<const std::int8_t> a, std::span<const std::int8_t> b);

/// popcount(a & b) over min(|a|, |b|) words.
std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

namespace scalar {
std::size_t common_prefix_length(std::span<const std::int8_t> a, std::span<const std::int8_t> b);
std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace scalar

#if defined(BRIDGECANCEL_HAVE_AVX2)
namespace avx2 {
std::size_t common_prefix_length(std::span<const std::int8_t> a, std::span<const std::int8_t> b);
std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace avx2
#endif

}  // namespace bridgecancel::kernels
