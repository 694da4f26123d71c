#pragma once

// Shared scalar pieces of the bitset shift kernels. The AVX2 variant reuses
// them for the boundary words its vector loop does not cover.

#include <cstddef>
#include <span>

#include "metacyclic/simd/kernels.hpp"

namespace metacyclic::simd::detail {

// dst[i] |= word i of (src << shift), for i in [begin, end). Bits pushed past
// the last word are dropped.
inline void shl_or_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift,
                          std::size_t begin, std::size_t end) {
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  for (std::size_t i = begin < q ? q : begin; i < end; ++i) {
    Word v = src[i - q] << r;
    if (r != 0 && i > q) v |= src[i - q - 1] >> (64 - r);
    dst[i] |= v;
  }
}

// dst[i] |= word i of (src >> shift), for i in [begin, end).
inline void shr_or_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift,
                          std::size_t begin, std::size_t end) {
  const std::size_t words = src.size();
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  for (std::size_t i = begin; i < end && i + q < words; ++i) {
    Word v = src[i + q] >> r;
    if (r != 0 && i + q + 1 < words) v |= src[i + q + 1] << (64 - r);
    dst[i] |= v;
  }
}

inline void mask_tail(std::span<Word> dst, std::size_t nbits) {
  const std::size_t used = nbits % 64;
  if (used != 0) dst[dst.size() - 1] &= (Word{1} << used) - 1;
}

}  // namespace metacyclic::simd::detail
