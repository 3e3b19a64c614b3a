#include "seqmatch/kernels.hpp"

#include <cstring>

#if defined(__x86_64__) && defined(__SSE2__)
#include <emmintrin.h>
#define SEQMATCH_HAVE_SSE2 1
#endif

namespace seqmatch::kernels::sse2 {

#if SEQMATCH_HAVE_SSE2

// First/last byte filter: a candidate position i must have haystack[i] ==
// needle[0] and haystack[i+k-1] == needle[k-1]; only those are verified.
std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept {
  const std::size_t n = haystack.size();
  const std::size_t k = needle.size();
  if (from > n || k > n - from) return npos;
  if (k == 0) return from;

  const char* h = haystack.data();
  const __m128i first = _mm_set1_epi8(needle[0]);
  const __m128i last = _mm_set1_epi8(needle[k - 1]);
  std::size_t i = from;
  for (; i + k - 1 + 16 <= n; i += 16) {
    const __m128i block_first = _mm_loadu_si128(reinterpret_cast<const __m128i*>(h + i));
    const __m128i block_last = _mm_loadu_si128(reinterpret_cast<const __m128i*>(h + i + k - 1));
    unsigned mask = static_cast<unsigned>(_mm_movemask_epi8(
        _mm_and_si128(_mm_cmpeq_epi8(first, block_first), _mm_cmpeq_epi8(last, block_last))));
    while (mask != 0) {
      const unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
      if (k <= 2 || std::memcmp(h + i + bit + 1, needle.data() + 1, k - 2) == 0) return i + bit;
      mask &= mask - 1;
    }
  }
  return scalar::find(haystack, needle, i);
}

void to_lower_ascii(std::span<char> bytes) noexcept {
  char* p = bytes.data();
  const std::size_t n = bytes.size();
  const __m128i below_a = _mm_set1_epi8('A' - 1);
  const __m128i above_z = _mm_set1_epi8('Z' + 1);
  const __m128i flip = _mm_set1_epi8(0x20);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i));
    // Signed compares: bytes >= 0x80 are negative and fall outside the range.
    const __m128i upper = _mm_and_si128(_mm_cmpgt_epi8(v, below_a), _mm_cmplt_epi8(v, above_z));
    v = _mm_or_si128(v, _mm_and_si128(upper, flip));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(p + i), v);
  }
  scalar::to_lower_ascii(bytes.subspan(i));
}

#else

std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept {
  return scalar::find(haystack, needle, from);
}

void to_lower_ascii(std::span<char> bytes) noexcept { scalar::to_lower_ascii(bytes); }

#endif

}  // namespace seqmatch::kernels::sse2
