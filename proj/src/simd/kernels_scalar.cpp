#include <bit>

#include "metacyclic/simd/kernels.hpp"
#include "shift_ops.hpp"

namespace metacyclic::simd {

namespace {

void dilate_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t nbits, std::size_t shift) {
  const std::size_t words = words_for(nbits);
  if (words == 1) {
    const Word x = src[0];
    Word out = x;
    if (shift != 0) {
      const Word mask = nbits == 64 ? ~Word{0} : (Word{1} << nbits) - 1;
      const std::size_t back = nbits - shift;
      out |= ((x << shift) | (x >> back)) & mask;
      out |= ((x << back) | (x >> shift)) & mask;
    }
    dst[0] = out;
    return;
  }
  for (std::size_t i = 0; i < words; ++i) dst[i] = src[i];
  if (shift == 0) return;
  const std::size_t back = nbits - shift;
  detail::shl_or_scalar(dst, src, shift, 0, words);
  detail::shr_or_scalar(dst, src, back, 0, words);
  detail::shl_or_scalar(dst, src, back, 0, words);
  detail::shr_or_scalar(dst, src, shift, 0, words);
  detail::mask_tail(dst, nbits);
}

std::size_t popcount_scalar(std::span<const Word> src) {
  std::size_t total = 0;
  for (const Word w : src) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static constexpr KernelTable table{"scalar", &dilate_scalar, &popcount_scalar};
  return table;
}

}  // namespace metacyclic::simd
