#pragma once

// Word-level kernels over cyclic residue bitsets. A bitset of width nbits
// occupies ceil(nbits / 64) words; bits at positions >= nbits are always zero.
//
// Every variant must produce bit-identical results to the scalar reference;
// tests/test_kernels.cpp checks this on random inputs.

#include <cstddef>
#include <cstdint>
#include <span>

namespace metacyclic::simd {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t nbits) { return (nbits + 63) / 64; }

struct KernelTable {
  const char* name;
  // dst = src | rotl(src, shift) | rotr(src, shift), rotations taken mod nbits.
  // dst and src must not overlap; shift must be in [0, nbits).
  void (*dilate)(std::span<Word> dst, std::span<const Word> src, std::size_t nbits, std::size_t shift);
  std::size_t (*popcount)(std::span<const Word> src);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 translation unit was not built for this target.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

// Chosen once per process: AVX2 when compiled in and supported by the CPU,
// scalar otherwise. METACYCLIC_KERNELS=scalar|avx2 overrides the choice.
const KernelTable& active_kernels();

}  // namespace metacyclic::simd
