#include "metacyclic/residue_set.hpp"

#include "metacyclic/error.hpp"

namespace metacyclic {

ResidueSet::ResidueSet(std::int64_t n) : n_(n) {
  if (n < 1) fail(ErrorKind::validation, "residue set needs a positive modulus");
  words_.assign(simd::words_for(static_cast<std::size_t>(n)), 0);
}

ResidueSet ResidueSet::zero(std::int64_t n) {
  ResidueSet s(n);
  s.insert(0);
  return s;
}

void ResidueSet::insert(Residue r) {
  const auto i = static_cast<std::size_t>(mod(r, n_));
  words_[i / 64] |= Word{1} << (i % 64);
}

bool ResidueSet::contains(Residue r) const {
  const auto i = static_cast<std::size_t>(mod(r, n_));
  return (words_[i / 64] >> (i % 64)) & 1;
}

std::size_t ResidueSet::count() const { return simd::active_kernels().popcount(words_); }

ResidueSet ResidueSet::dilated(Residue step) const {
  ResidueSet out(n_);
  simd::active_kernels().dilate(out.words_, words_, static_cast<std::size_t>(n_),
                                static_cast<std::size_t>(mod(step, n_)));
  return out;
}

ResidueSet ResidueSet::negated() const {
  ResidueSet out(n_);
  for (const Residue r : elements()) out.insert(-r);
  return out;
}

bool ResidueSet::subset_of(const ResidueSet& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<Residue> ResidueSet::elements() const {
  std::vector<Residue> out;
  for (Residue r = 0; r < n_; ++r)
    if (contains(r)) out.push_back(r);
  return out;
}

}  // namespace metacyclic
