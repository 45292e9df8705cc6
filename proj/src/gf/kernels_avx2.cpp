// Compiled with -mavx2. Nothing in this file may run before the dispatcher
// has confirmed AVX2 support, so the CPU query lives in kernels_dispatch.cpp.

#include <immintrin.h>

#include <bit>

#include "nis2/gf/kernels.hpp"

namespace nis2::gf::kernels {

namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < words; ++i) folded ^= a[i] & b[i];
  return std::popcount(folded) & 1;
}

// Sixteen residues per step in 16-bit lanes. t = dst + c*src < 2^16 because
// p <= 251. Barrett with m = floor(2^16/p) underestimates the quotient by at
// most one, so a single conditional subtract finishes the reduction.
inline __m128i mod_step(__m256i t, __m256i m, __m256i pv) {
  __m256i q = _mm256_mulhi_epu16(t, m);
  __m256i r = _mm256_sub_epi16(t, _mm256_mullo_epi16(q, pv));
  r = _mm256_min_epu16(r, _mm256_sub_epi16(r, pv));
  return _mm_packus_epi16(_mm256_castsi256_si128(r), _mm256_extracti128_si256(r, 1));
}

void axpy_mod(Elem* dst, const Elem* src, Elem c, unsigned p, std::size_t n) {
  const __m256i cv = _mm256_set1_epi16(short(c));
  const __m256i pv = _mm256_set1_epi16(short(p));
  const __m256i m = _mm256_set1_epi16(short(65536U / p));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i s = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256i d = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256i t = _mm256_add_epi16(d, _mm256_mullo_epi16(s, cv));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), mod_step(t, m, pv));
  }
  for (; i < n; ++i) dst[i] = Elem((dst[i] + unsigned(c) * src[i]) % p);
}

void scale_mod(Elem* dst, Elem c, unsigned p, std::size_t n) {
  const __m256i cv = _mm256_set1_epi16(short(c));
  const __m256i pv = _mm256_set1_epi16(short(p));
  const __m256i m = _mm256_set1_epi16(short(65536U / p));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i d = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256i t = _mm256_mullo_epi16(d, cv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), mod_step(t, m, pv));
  }
  for (; i < n; ++i) dst[i] = Elem((unsigned(c) * dst[i]) % p);
}

}  // namespace

const Table& avx2_table() {
  static constexpr Table kAvx2{"avx2", xor_words, and_parity, axpy_mod, scale_mod};
  return kAvx2;
}

}  // namespace nis2::gf::kernels
