#include "seqmatch/kernels.hpp"

namespace seqmatch::kernels::scalar {

std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept {
  const std::size_t n = haystack.size();
  const std::size_t k = needle.size();
  if (from > n || k > n - from) return npos;
  if (k == 0) return from;
  for (std::size_t i = from; i + k <= n; ++i) {
    std::size_t j = 0;
    while (j < k && haystack[i + j] == needle[j]) ++j;
    if (j == k) return i;
  }
  return npos;
}

void to_lower_ascii(std::span<char> bytes) noexcept {
  for (char& c : bytes) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
}

}  // namespace seqmatch::kernels::scalar
