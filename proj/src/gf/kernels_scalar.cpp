#include "nis2/gf/kernels.hpp"

#include <bit>

namespace nis2::gf::kernels {

namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

void axpy_mod(Elem* dst, const Elem* src, Elem c, unsigned p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = Elem((dst[i] + unsigned(c) * src[i]) % p);
}

void scale_mod(Elem* dst, Elem c, unsigned p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = Elem((unsigned(c) * dst[i]) % p);
}

constexpr Table kScalar{"scalar", xor_words, and_parity, axpy_mod, scale_mod};

}  // namespace

const Table& scalar() { return kScalar; }

}  // namespace nis2::gf::kernels
