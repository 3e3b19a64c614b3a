#include "seqmatch/kernels.hpp"

#include <cstring>

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>
#define SEQMATCH_HAVE_AVX2 1
#endif

namespace seqmatch::kernels::avx2 {

#if SEQMATCH_HAVE_AVX2

std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept {
  const std::size_t n = haystack.size();
  const std::size_t k = needle.size();
  if (from > n || k > n - from) return npos;
  if (k == 0) return from;

  const char* h = haystack.data();
  const __m256i first = _mm256_set1_epi8(needle[0]);
  const __m256i last = _mm256_set1_epi8(needle[k - 1]);
  std::size_t i = from;
  for (; i + k - 1 + 32 <= n; i += 32) {
    const __m256i block_first = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(h + i));
    const __m256i block_last = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(h + i + k - 1));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(
        _mm256_and_si256(_mm256_cmpeq_epi8(first, block_first), _mm256_cmpeq_epi8(last, block_last))));
    while (mask != 0) {
      const unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
      if (k <= 2 || std::memcmp(h + i + bit + 1, needle.data() + 1, k - 2) == 0) return i + bit;
      mask &= mask - 1;
    }
  }
  // Method names are mostly shorter than one AVX2 block; SSE2 covers the tail.
  return sse2::find(haystack, needle, i);
}

void to_lower_ascii(std::span<char> bytes) noexcept {
  char* p = bytes.data();
  const std::size_t n = bytes.size();
  const __m256i below_a = _mm256_set1_epi8('A' - 1);
  const __m256i above_z = _mm256_set1_epi8('Z' + 1);
  const __m256i flip = _mm256_set1_epi8(0x20);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i upper = _mm256_and_si256(_mm256_cmpgt_epi8(v, below_a), _mm256_cmpgt_epi8(above_z, v));
    v = _mm256_or_si256(v, _mm256_and_si256(upper, flip));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + i), v);
  }
  sse2::to_lower_ascii(bytes.subspan(i));
}

#else

std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept {
  return sse2::find(haystack, needle, from);
}

void to_lower_ascii(std::span<char> bytes) noexcept { sse2::to_lower_ascii(bytes); }

#endif

}  // namespace seqmatch::kernels::avx2
