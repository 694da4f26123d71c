// Compiled with -mavx2; only reached after cpu_has_avx2() confirms support.

#include <immintrin.h>

#include <bit>

#include "metacyclic/simd/kernels.hpp"
#include "shift_ops.hpp"

namespace metacyclic::simd {

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Vector body of shl_or_scalar: lanes i in [q + 1, words) read src[i-q] and src[i-q-1].
void shl_or_avx2(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t words = src.size();
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  if (q >= words) return;
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(r));
  // A count of 64 zeroes every lane, which covers r == 0 without a branch.
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - r));
  detail::shl_or_scalar(dst, src, shift, q, q + 1);
  std::size_t i = q + 1;
  for (; i + 4 <= words; i += 4) {
    const __m256i cur = load(src.data() + (i - q));
    const __m256i prev = load(src.data() + (i - q - 1));
    const __m256i v = _mm256_or_si256(_mm256_sll_epi64(cur, lo_count), _mm256_srl_epi64(prev, hi_count));
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), v));
  }
  detail::shl_or_scalar(dst, src, shift, i, words);
}

// Vector body of shr_or_scalar: lanes i in [0, words - q - 1) read src[i+q] and src[i+q+1].
void shr_or_avx2(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t words = src.size();
  const std::size_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  if (q >= words) return;
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(r));
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - r));
  const std::size_t body_end = words - q - 1;
  std::size_t i = 0;
  for (; i + 4 <= body_end; i += 4) {
    const __m256i cur = load(src.data() + (i + q));
    const __m256i next = load(src.data() + (i + q + 1));
    const __m256i v = _mm256_or_si256(_mm256_srl_epi64(cur, lo_count), _mm256_sll_epi64(next, hi_count));
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), v));
  }
  detail::shr_or_scalar(dst, src, shift, i, words - q);
}

void dilate_avx2(std::span<Word> dst, std::span<const Word> src, std::size_t nbits, std::size_t shift) {
  const std::size_t words = words_for(nbits);
  if (words < 8) {
    scalar_kernels().dilate(dst, src, nbits, shift);
    return;
  }
  const std::span<Word> out = dst.first(words);
  const std::span<const Word> in = src.first(words);
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(out.data() + i, load(in.data() + i));
  for (; i < words; ++i) out[i] = in[i];
  if (shift == 0) return;
  const std::size_t back = nbits - shift;
  shl_or_avx2(out, in, shift);
  shr_or_avx2(out, in, back);
  shl_or_avx2(out, in, back);
  shr_or_avx2(out, in, shift);
  detail::mask_tail(out, nbits);
}

// Nibble-lookup popcount, accumulated per 64-bit lane with SAD.
std::size_t popcount_avx2(std::span<const Word> src) {
  const std::size_t words = src.size();
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = load(src.data() + i);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static constexpr KernelTable table{"avx2", &dilate_avx2, &popcount_avx2};
  return &table;
}

}  // namespace metacyclic::simd
