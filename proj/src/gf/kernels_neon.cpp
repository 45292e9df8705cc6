#include <arm_neon.h>

#include <bit>

#include "nis2/gf/kernels.hpp"

namespace nis2::gf::kernels {

namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2)
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] ^= src[i];
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2)
    acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  std::uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
  for (; i < words; ++i) folded ^= a[i] & b[i];
  return std::popcount(folded) & 1;
}

// Same Barrett step as the AVX2 variant, eight 16-bit lanes at a time.
inline uint16x8_t mod_step(uint16x8_t t, std::uint16_t m, uint16x8_t pv) {
  uint32x4_t lo = vmull_n_u16(vget_low_u16(t), m);
  uint32x4_t hi = vmull_n_u16(vget_high_u16(t), m);
  uint16x8_t q = vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
  uint16x8_t r = vsubq_u16(t, vmulq_u16(q, pv));
  return vminq_u16(r, vsubq_u16(r, pv));
}

void axpy_mod(Elem* dst, const Elem* src, Elem c, unsigned p, std::size_t n) {
  const uint16x8_t pv = vdupq_n_u16(std::uint16_t(p));
  const std::uint16_t m = std::uint16_t(65536U / p);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint16x8_t s = vmovl_u8(vld1_u8(src + i));
    uint16x8_t d = vmovl_u8(vld1_u8(dst + i));
    uint16x8_t t = vmlaq_n_u16(d, s, c);
    vst1_u8(dst + i, vmovn_u16(mod_step(t, m, pv)));
  }
  for (; i < n; ++i) dst[i] = Elem((dst[i] + unsigned(c) * src[i]) % p);
}

void scale_mod(Elem* dst, Elem c, unsigned p, std::size_t n) {
  const uint16x8_t pv = vdupq_n_u16(std::uint16_t(p));
  const std::uint16_t m = std::uint16_t(65536U / p);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint16x8_t t = vmulq_n_u16(vmovl_u8(vld1_u8(dst + i)), c);
    vst1_u8(dst + i, vmovn_u16(mod_step(t, m, pv)));
  }
  for (; i < n; ++i) dst[i] = Elem((unsigned(c) * dst[i]) % p);
}

}  // namespace

const Table& neon_table() {
  static constexpr Table kNeon{"neon", xor_words, and_parity, axpy_mod, scale_mod};
  return kNeon;
}

}  // namespace nis2::gf::kernels
