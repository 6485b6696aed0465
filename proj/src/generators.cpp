#include "psm/generators.hpp"

#include <algorithm>
#include <numeric>

namespace psm {

std::uint64_t InstanceGen::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_);
}

std::uint64_t InstanceGen::between(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

bool InstanceGen::chance(double probability) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < probability;
}

PartitionPtr InstanceGen::partition(std::size_t n_constants, std::size_t n_parameters) {
  std::vector<Symbol> constants, parameters;
  for (std::size_t i = 0; i < n_constants; ++i)
    constants.push_back(static_cast<Symbol>('a' + i));
  for (std::size_t i = 0; i < n_parameters; ++i)
    parameters.push_back(static_cast<Symbol>('A' + i));
  return make_partition(std::move(constants), std::move(parameters));
}

PString InstanceGen::uniform_string(const PartitionPtr& alphabet, std::size_t len) {
  std::vector<Symbol> pool = alphabet->constants();
  pool.insert(pool.end(), alphabet->parameters().begin(), alphabet->parameters().end());
  std::vector<Symbol> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(pool[below(pool.size())]);
  return PString(std::move(out), alphabet);
}

PString InstanceGen::constants_only_string(const PartitionPtr& alphabet,
                                           std::size_t len) {
  const auto& pool = alphabet->constants();
  std::vector<Symbol> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(pool[below(pool.size())]);
  return PString(std::move(out), alphabet);
}

PermutationWitness InstanceGen::permutation(std::size_t n) {
  std::vector<std::uint32_t> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0u);
  std::shuffle(mapping.begin(), mapping.end(), rng_);
  return PermutationWitness(std::move(mapping));
}

PString InstanceGen::periodic_string(const PartitionPtr& alphabet, std::size_t len,
                                     std::size_t max_block) {
  if (len == 0) return PString({}, alphabet);
  const std::size_t block_len = between(1, std::max<std::size_t>(1, max_block));
  PString block = uniform_string(alphabet, std::min(block_len, len));
  PermutationWitness f = permutation(alphabet->param_count());

  std::vector<Symbol> out;
  out.reserve(len);
  PString current = block;
  while (out.size() < len) {
    for (Symbol s : current.symbols()) {
      out.push_back(s);
      if (out.size() == len) break;
    }
    current = apply(f, current);
  }
  return PString(std::move(out), alphabet);
}

PString InstanceGen::layered_periodic_string(const PartitionPtr& alphabet,
                                             std::size_t len) {
  std::vector<Symbol> pool = alphabet->constants();
  pool.insert(pool.end(), alphabet->parameters().begin(), alphabet->parameters().end());

  PString layer = uniform_string(alphabet, std::max<std::size_t>(1, below(3) + 1));
  while (layer.size() < len) {
    PermutationWitness f = permutation(alphabet->param_count());
    const std::size_t copies = between(3, 6);
    std::vector<Symbol> grown;
    grown.reserve(layer.size() * copies + 1);
    PString current = layer;
    for (std::size_t c = 0; c < copies && grown.size() < len; ++c) {
      grown.insert(grown.end(), current.symbols().begin(), current.symbols().end());
      current = apply(f, current);
    }
    // A breaker symbol keeps the new layer from collapsing into the old
    // period.
    grown.push_back(pool[below(pool.size())]);
    if (grown.size() > len) grown.resize(len);
    layer = PString(std::move(grown), alphabet);
  }
  return layer;
}

}  // namespace psm
