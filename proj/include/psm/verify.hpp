#ifndef PSM_VERIFY_HPP
#define PSM_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "psm/pstring.hpp"

namespace psm {

struct VerifyOptions {
  std::uint64_t cases = 1000;
  std::uint64_t seed = 1;
  std::size_t max_n = 300;
  std::size_t max_m = 60;
  std::size_t max_sigma = 3;
  std::size_t max_pi = 4;
};

// Everything needed to replay a failing case by hand.
struct Reproducer {
  std::string kind;
  std::uint64_t case_seed = 0;
  std::string sigma;
  std::string pi;
  std::string text;
  std::string pattern;
  std::string detail;

  std::string to_string() const;
};

struct VerifyOutcome {
  std::uint64_t cases_run = 0;
  std::optional<Reproducer> failure;
  bool ok() const { return !failure.has_value(); }
};

// Runs `cases` randomized checks: the engine against the window-by-window
// reference, the one-pass table builder against the definitional one, and a
// rotation of the periodicity law checks. Case i is seeded with seed+i, so a
// failure replays independently of the rest of the sweep. Failing search and
// table cases are shrunk greedily before reporting. Progress notes go to
// `log` when given.
VerifyOutcome run_verification(const VerifyOptions& options, std::ostream* log = nullptr);

}  // namespace psm

#endif
