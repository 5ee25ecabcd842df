// AVX2 row kernels. Compiled with -mavx2 on x86-64 only; other targets get
// the stubs at the bottom. Field indices are always < q <= 16 here, so a
// 16-byte VPSHUFB table indexed by the element byte computes any unary map,
// in particular multiplication by a fixed scalar. Addition is XOR of indices
// in characteristic 2 and a byte add with conditional subtract of p in prime
// fields (sums stay below 26, well inside signed byte range).

#include "simcount/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace simcount::kern {
namespace {

inline __m256i broadcast_lut(const Elem* row) {
  // Rows of the multiplication table are padded, so the 16-byte load is safe.
  const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row));
  return _mm256_broadcastsi128_si256(lo);
}

void axpy_char2(const Fq& f, Elem* y, const Elem* x, Elem a, std::size_t len) {
  const __m256i lut = broadcast_lut(f.mul_row(a));
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i xv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i yv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i prod = _mm256_shuffle_epi8(lut, xv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                        _mm256_xor_si256(yv, prod));
  }
  if (i < len) scalar_ops().axpy(f, y + i, x + i, a, len - i);
}

void axpy_prime(const Fq& f, Elem* y, const Elem* x, Elem a, std::size_t len) {
  const __m256i lut = broadcast_lut(f.mul_row(a));
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(f.p()));
  const __m256i pm1 = _mm256_set1_epi8(static_cast<char>(f.p() - 1));
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i xv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i yv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i prod = _mm256_shuffle_epi8(lut, xv);
    __m256i sum = _mm256_add_epi8(yv, prod);
    const __m256i over = _mm256_cmpgt_epi8(sum, pm1);
    sum = _mm256_sub_epi8(sum, _mm256_and_si256(over, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), sum);
  }
  if (i < len) scalar_ops().axpy(f, y + i, x + i, a, len - i);
}

void scale_lut(const Fq& f, Elem* y, Elem a, std::size_t len) {
  const __m256i lut = broadcast_lut(f.mul_row(a));
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i yv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                        _mm256_shuffle_epi8(lut, yv));
  }
  if (i < len) scalar_ops().scale(f, y + i, a, len - i);
}

}  // namespace

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

const Ops* avx2_ops(const Fq& f) {
  if (!cpu_has_avx2()) return nullptr;
  static const Ops char2{axpy_char2, scale_lut, "avx2"};
  static const Ops prime{axpy_prime, scale_lut, "avx2"};
  if (f.p() == 2 && f.q() <= 16) return &char2;
  if (f.e() == 1 && f.p() <= 13) return &prime;
  return nullptr;
}

}  // namespace simcount::kern

#else

namespace simcount::kern {

bool cpu_has_avx2() { return false; }
const Ops* avx2_ops(const Fq&) { return nullptr; }

}  // namespace simcount::kern

#endif
