#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "metacyclic/residue.hpp"
#include "metacyclic/simd/kernels.hpp"

namespace metacyclic {

/// Subset of Z_n stored as a bitset, bit r set iff r is a member.
class ResidueSet {
 public:
  using Word = simd::Word;

  explicit ResidueSet(std::int64_t n);

  // The set {0}.
  static ResidueSet zero(std::int64_t n);

  std::int64_t modulus() const noexcept { return n_; }

  void insert(Residue r);
  bool contains(Residue r) const;
  std::size_t count() const;
  bool full() const { return count() == static_cast<std::size_t>(n_); }

  // S + {-step, 0, step}.
  ResidueSet dilated(Residue step) const;
  ResidueSet negated() const;
  bool subset_of(const ResidueSet& other) const;
  std::vector<Residue> elements() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool operator==(const ResidueSet&) const = default;

 private:
  std::int64_t n_;
  std::vector<Word> words_;
};

}  // namespace metacyclic
