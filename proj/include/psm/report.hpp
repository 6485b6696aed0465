#ifndef PSM_REPORT_HPP
#define PSM_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psm/engine.hpp"

namespace psm {

// Wire format of one search run. to_json() emits exactly the documented
// schema:
//   {positions:[...], n, m, pi_p,
//    metrics:{match_calls,loop_iterations,count_decrements,peak_aux_words},
//    wall_ns}
// Serialization is canonical (sorted keys, no whitespace), so parse →
// serialize is byte-stable.
struct RunReport {
  std::vector<std::size_t> positions;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t pi_p = 0;             // parameters occurring in the (normalized) pattern
  std::size_t alphabet_params = 0;  // |Pi| of the partition the engine ran with
  std::size_t alphabet_constants = 0;  // |Sigma|, or the constant token space
  EngineMetrics metrics;
  std::uint64_t wall_ns = 0;

  std::string to_json() const;
  static RunReport from_json(std::string_view text);

  // Re-checks the engine's budget claims on this run; throws std::logic_error
  // when a bound is exceeded.
  void validate() const;
};

// Budget checks shared by reports and tests.
bool metrics_within_time_bound(const EngineMetrics& metrics, std::size_t n,
                               std::size_t m, std::size_t pi_p);
bool metrics_within_space_bound(const EngineMetrics& metrics, std::size_t m,
                                std::size_t alphabet_params);
std::size_t space_bound_words(std::size_t m, std::size_t alphabet_params);

inline constexpr std::string_view kBenchCsvHeader =
    "n,m,pi_p,match_calls,loop_iterations,peak_aux_words,wall_ns";

}  // namespace psm

#endif
