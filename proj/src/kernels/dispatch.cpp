#include "seqmatch/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace seqmatch::kernels {

namespace {

using FindFn = std::size_t (*)(std::string_view, std::string_view, std::size_t) noexcept;
using LowerFn = void (*)(std::span<char>) noexcept;

struct Table {
  Isa isa;
  FindFn find;
  LowerFn lower;
};

constexpr Table kScalar{Isa::Scalar, &scalar::find, &scalar::to_lower_ascii};
constexpr Table kSse2{Isa::Sse2, &sse2::find, &sse2::to_lower_ascii};
constexpr Table kAvx2{Isa::Avx2, &avx2::find, &avx2::to_lower_ascii};

const Table* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return &kAvx2;
    case Isa::Sse2: return &kSse2;
    case Isa::Scalar: break;
  }
  return &kScalar;
}

Isa clamp(Isa wanted) noexcept {
  if (isa_supported(wanted)) return wanted;
  return detected_isa();
}

const Table* initial_table() noexcept {
  Isa isa = detected_isa();
  if (const char* env = std::getenv("SEQMATCH_ISA")) {
    const std::string_view name(env);
    if (name == "scalar") isa = Isa::Scalar;
    else if (name == "sse2") isa = clamp(Isa::Sse2);
    else if (name == "avx2") isa = clamp(Isa::Avx2);
  }
  return table_for(isa);
}

std::atomic<const Table*>& active() noexcept {
  static std::atomic<const Table*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return "avx2";
    case Isa::Sse2: return "sse2";
    case Isa::Scalar: break;
  }
  return "scalar";
}

bool isa_supported(Isa isa) noexcept {
#if defined(__x86_64__)
  switch (isa) {
    case Isa::Avx2: return __builtin_cpu_supports("avx2");
    case Isa::Sse2: return true;
    case Isa::Scalar: return true;
  }
  return false;
#else
  return isa == Isa::Scalar;
#endif
}

Isa detected_isa() noexcept {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Sse2)) return Isa::Sse2;
  return Isa::Scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed)->isa; }

Isa set_isa(Isa isa) noexcept {
  const Table* table = table_for(clamp(isa));
  active().store(table, std::memory_order_relaxed);
  return table->isa;
}

std::size_t find(std::string_view haystack, std::string_view needle, std::size_t from) noexcept {
  return active().load(std::memory_order_relaxed)->find(haystack, needle, from);
}

void to_lower_ascii(std::span<char> bytes) noexcept {
  active().load(std::memory_order_relaxed)->lower(bytes);
}

std::string lowered(std::string_view text) {
  std::string out(text);
  to_lower_ascii(out);
  return out;
}

}  // namespace seqmatch::kernels
