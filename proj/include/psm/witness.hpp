#ifndef PSM_WITNESS_HPP
#define PSM_WITNESS_HPP

#include <cstdint>
#include <vector>

#include "psm/pstring.hpp"

namespace psm {

// A bijection on the parameter alphabet, stored as dense parameter indices.
// Constants are always fixed points when the witness is applied to strings.
class PermutationWitness {
 public:
  // Throws std::invalid_argument unless mapping is a permutation of
  // {0..n-1}.
  explicit PermutationWitness(std::vector<std::uint32_t> mapping);

  static PermutationWitness identity(std::size_t n);

  std::size_t size() const { return mapping_.size(); }
  std::uint32_t image(std::uint32_t index) const { return mapping_[index]; }
  const std::vector<std::uint32_t>& mapping() const { return mapping_; }

  Symbol apply_symbol(Symbol s, const AlphabetPartition& alphabet) const;

  PermutationWitness inverse() const;
  // (this ∘ other): other applied first.
  PermutationWitness compose(const PermutationWitness& other) const;
  bool commutes_with(const PermutationWitness& other) const;
  bool is_identity() const;

  bool operator==(const PermutationWitness&) const = default;

 private:
  std::vector<std::uint32_t> mapping_;
};

// Position-wise image of w under f; constants are fixed, length is preserved.
PString apply(const PermutationWitness& f, const PString& w);

}  // namespace psm

#endif
