#include "psm/witness.hpp"

#include <numeric>
#include <stdexcept>

namespace psm {

PermutationWitness::PermutationWitness(std::vector<std::uint32_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::uint32_t v : mapping_) {
    if (v >= mapping_.size() || seen[v])
      throw std::invalid_argument("PermutationWitness: mapping is not a permutation");
    seen[v] = true;
  }
}

PermutationWitness PermutationWitness::identity(std::size_t n) {
  std::vector<std::uint32_t> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0u);
  return PermutationWitness(std::move(mapping));
}

Symbol PermutationWitness::apply_symbol(Symbol s,
                                        const AlphabetPartition& alphabet) const {
  if (!alphabet.is_parameter(s)) return s;
  const std::size_t idx = alphabet.param_index(s);
  if (idx >= mapping_.size())
    throw std::invalid_argument("PermutationWitness: parameter index out of range");
  return alphabet.param_symbol(mapping_[idx]);
}

PermutationWitness PermutationWitness::inverse() const {
  std::vector<std::uint32_t> inv(mapping_.size());
  for (std::uint32_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return PermutationWitness(std::move(inv));
}

PermutationWitness PermutationWitness::compose(const PermutationWitness& other) const {
  if (size() != other.size())
    throw std::invalid_argument("PermutationWitness::compose: size mismatch");
  std::vector<std::uint32_t> out(mapping_.size());
  for (std::uint32_t i = 0; i < mapping_.size(); ++i)
    out[i] = mapping_[other.mapping_[i]];
  return PermutationWitness(std::move(out));
}

bool PermutationWitness::commutes_with(const PermutationWitness& other) const {
  return compose(other) == other.compose(*this);
}

bool PermutationWitness::is_identity() const {
  for (std::uint32_t i = 0; i < mapping_.size(); ++i)
    if (mapping_[i] != i) return false;
  return true;
}

PString apply(const PermutationWitness& f, const PString& w) {
  const AlphabetPartition& alphabet = w.alphabet();
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Symbol s : w.symbols()) out.push_back(f.apply_symbol(s, alphabet));
  return PString(std::move(out), w.partition());
}

}  // namespace psm
