#ifndef PSM_GENERATORS_HPP
#define PSM_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "psm/pstring.hpp"
#include "psm/witness.hpp"

namespace psm {

// Seeded instance generation for randomized checks. The RNG is std::mt19937_64
// seeded directly with the case seed, so any reported case replays from its
// seed alone on every platform.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound);           // uniform in [0, bound)
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);  // inclusive
  bool chance(double probability);

  // Constants are lowercase letters from 'a', parameters uppercase from 'A',
  // so generated instances print as plain text.
  PartitionPtr partition(std::size_t n_constants, std::size_t n_parameters);

  PString uniform_string(const PartitionPtr& alphabet, std::size_t len);
  PString constants_only_string(const PartitionPtr& alphabet, std::size_t len);
  // Repeats a short random block through a random renaming, then truncates:
  // the result is built to carry a period of the block length.
  PString periodic_string(const PartitionPtr& alphabet, std::size_t len,
                          std::size_t max_block);
  // Periodic layers stacked on each other so several prefix periods appear.
  PString layered_periodic_string(const PartitionPtr& alphabet, std::size_t len);

  PermutationWitness permutation(std::size_t n);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace psm

#endif
