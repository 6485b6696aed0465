#include "psm/report.hpp"

#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace psm {

bool metrics_within_time_bound(const EngineMetrics& metrics, std::size_t n,
                               std::size_t m, std::size_t pi_p) {
  const std::uint64_t work =
      metrics.match_calls + metrics.loop_iterations + metrics.count_decrements;
  const std::uint64_t budget = 8 * ((static_cast<std::uint64_t>(pi_p) + 2) * n + m);
  return work <= budget;
}

std::size_t space_bound_words(std::size_t m, std::size_t alphabet_params) {
  // ceil(log2(m+1)) table entries of two words, two parameter-indexed
  // arrays, and the fixed 64-word scalar budget.
  const std::size_t table_words = 2 * static_cast<std::size_t>(std::bit_width(m));
  return table_words + 2 * alphabet_params + 64;
}

bool metrics_within_space_bound(const EngineMetrics& metrics, std::size_t m,
                                std::size_t alphabet_params) {
  return metrics.peak_aux_words <= space_bound_words(m, alphabet_params);
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["positions"] = positions;
  j["n"] = n;
  j["m"] = m;
  j["pi_p"] = pi_p;
  j["metrics"] = {
      {"match_calls", metrics.match_calls},
      {"loop_iterations", metrics.loop_iterations},
      {"count_decrements", metrics.count_decrements},
      {"peak_aux_words", metrics.peak_aux_words},
  };
  j["wall_ns"] = wall_ns;
  return j.dump();
}

RunReport RunReport::from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RunReport r;
  r.positions = j.at("positions").get<std::vector<std::size_t>>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.pi_p = j.at("pi_p").get<std::size_t>();
  const auto& metrics = j.at("metrics");
  r.metrics.match_calls = metrics.at("match_calls").get<std::uint64_t>();
  r.metrics.loop_iterations = metrics.at("loop_iterations").get<std::uint64_t>();
  r.metrics.count_decrements = metrics.at("count_decrements").get<std::uint64_t>();
  r.metrics.peak_aux_words = metrics.at("peak_aux_words").get<std::size_t>();
  r.wall_ns = j.at("wall_ns").get<std::uint64_t>();
  return r;
}

void RunReport::validate() const {
  for (std::size_t i = 1; i < positions.size(); ++i)
    if (positions[i - 1] >= positions[i])
      throw std::logic_error("report: positions not strictly ascending");
  if (!metrics_within_time_bound(metrics, n, m, pi_p))
    throw std::logic_error("report: work counters exceed the time budget");
  if (!metrics_within_space_bound(metrics, m, alphabet_params))
    throw std::logic_error("report: peak auxiliary words exceed the space budget");
}

}  // namespace psm
