#pragma once

// Row kernels for exact elimination.
//
// Every kernel has a scalar reference implementation; SIMD variants (AVX2 on
// x86-64, NEON on aarch64) are compiled when the toolchain allows and picked
// at runtime. All variants must agree bit-for-bit with the scalar table.

#include <cstddef>
#include <cstdint>

#include "nis2/gf/field.hpp"

namespace nis2::gf::kernels {

struct Table {
  const char* name;
  /// dst[i] ^= src[i]  (row addition over F_2, 64 entries per word)
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  /// Parity of popcount(a & b): the F_2 dot product of two packed rows.
  bool (*and_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// dst[i] = (dst[i] + c * src[i]) mod p, entries and c already reduced.
  void (*axpy_mod)(Elem* dst, const Elem* src, Elem c, unsigned p, std::size_t n);
  /// dst[i] = (c * dst[i]) mod p.
  void (*scale_mod)(Elem* dst, Elem c, unsigned p, std::size_t n);
};

const Table& scalar();

/// nullptr when the variant was not compiled in or the CPU lacks it.
const Table* avx2();
const Table* neon();

/// The variant used by the library. Chosen once: the best available SIMD
/// table, unless the environment variable NIS2_KERNELS=scalar is set.
const Table& active();

}  // namespace nis2::gf::kernels
