#pragma once

// Byte-parallel string kernels used by the name index hot loops.
//
// Every kernel has a scalar reference implementation plus SSE2 and AVX2
// variants on x86-64. The dispatching entry points pick the best variant the
// CPU supports on first use; SEQMATCH_ISA=scalar|sse2|avx2 in the environment
// (or set_isa) pins a specific one. All variants return identical results.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace seqmatch::kernels {

enum class Isa { Scalar, Sse2, Avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
Isa detected_isa() noexcept;
Isa active_isa() noexcept;
// Falls back to the best supported ISA if `isa` is unavailable. Returns the ISA in effect.
Isa set_isa(Isa isa) noexcept;

inline constexpr std::size_t npos = std::string_view::npos;

// Leftmost occurrence of `needle` in `haystack` starting at `from`, or npos.
std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from = 0) noexcept;
void to_lower_ascii(std::span<char> bytes) noexcept;
std::string lowered(std::string_view text);

namespace scalar {
std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept;
void to_lower_ascii(std::span<char> bytes) noexcept;
}  // namespace scalar

namespace sse2 {
std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept;
void to_lower_ascii(std::span<char> bytes) noexcept;
}  // namespace sse2

namespace avx2 {
std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept;
void to_lower_ascii(std::span<char> bytes) noexcept;
}  // namespace avx2

}  // namespace seqmatch::kernels
