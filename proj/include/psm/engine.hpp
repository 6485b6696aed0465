#ifndef PSM_ENGINE_HPP
#define PSM_ENGINE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "psm/match.hpp"
#include "psm/pstring.hpp"

namespace psm {

// One prefix period of the pattern and the longest prefix it governs.
struct PrefixPeriodEntry {
  std::size_t val;
  std::size_t reach;
  bool operator==(const PrefixPeriodEntry&) const = default;
};

// Ascending list of prefix periods. Structural facts that hold for every
// table the engine builds: vals at least double step to step, reaches rise
// strictly, reach >= k*val, and 2^size <= |P|, so the table stays
// logarithmic in the pattern length.
class PrefixPeriodTable {
 public:
  PrefixPeriodTable() = default;
  explicit PrefixPeriodTable(std::vector<PrefixPeriodEntry> entries)
      : entries_(std::move(entries)) {}

  const std::vector<PrefixPeriodEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const PrefixPeriodEntry& operator[](std::size_t i) const { return entries_[i]; }

  // Throws std::logic_error when a structural invariant is broken.
  void validate(std::size_t pattern_len, std::size_t k) const;

 private:
  std::vector<PrefixPeriodEntry> entries_;
};

// Work and space gauges for one engine run.
//   match_calls      — invocations of the O(1) extension test
//   loop_iterations  — outer iterations plus inner-loop condition checks
//   count_decrements — window positions visited while shrinking windows
//   peak_aux_words   — high-water auxiliary words: 2 per table entry, one
//                      per parameter for each of the first/count arrays,
//                      plus a flat 64-word budget for scalars; input text
//                      and pattern storage excluded
struct EngineMetrics {
  std::uint64_t match_calls = 0;
  std::uint64_t loop_iterations = 0;
  std::uint64_t count_decrements = 0;
  std::size_t peak_aux_words = 0;

  void note_aux(std::size_t table_entries, std::size_t param_count) {
    const std::size_t words = 2 * table_entries + 2 * param_count + 64;
    if (words > peak_aux_words) peak_aux_words = words;
  }
  void absorb(const EngineMetrics& other);
};

// Loop state shared by preprocessing and search: window start, frontier one
// past the matched region, the current table index (-1 = none), and the
// first/count context. The standing invariants, re-checked in debug mode:
//   - P[0:frontier-win_start] p-matches text[win_start:frontier]
//   - idx is the largest index with table[idx].val * k <= frontier-win_start
struct MatcherState {
  std::size_t win_start = 0;
  std::size_t frontier = 0;
  std::ptrdiff_t idx = -1;
  ScanContext ctx;
};

// Re-derives the pattern/parameter split when the pattern has no parameters:
// the smallest constant code occurring in P becomes the only parameter and
// everything else (including previously declared parameters) becomes
// constant. Search results are unchanged by this view. Patterns that already
// contain a parameter pass through untouched.
struct NormalizedPattern {
  PString pattern;
  PartitionPtr partition;
  bool changed;
};
NormalizedPattern normalize_pattern(const PString& P);

struct PreprocessResult {
  PrefixPeriodTable table;
  EngineMetrics metrics;
};

// One-pass prefix-period construction. Pre: pcs(P) non-empty (run
// normalize_pattern first); throws std::invalid_argument otherwise.
PreprocessResult prefix_periods(const PString& P, std::span<const std::uint32_t> first);
PreprocessResult prefix_periods(const PString& P);

struct SearchResult {
  std::vector<std::size_t> positions;
  EngineMetrics metrics;
};

// All window starts i with T[i:i+|P|] equivalent to P, ascending. Normalizes
// internally when pcs(P) is empty. Metrics cover preprocessing plus the scan.
// Pre: |P| >= 1 and both strings share one partition object.
SearchResult search(const PString& T, const PString& P);

// Streaming form; on_match receives each position in ascending order.
EngineMetrics search_visit(const PString& T, const PString& P,
                           const std::function<void(std::size_t)>& on_match);

// Window-by-window reference search, independent of the table/first/count
// machinery. Pre: |P| >= 1.
std::vector<std::size_t> naive_search(const PString& T, const PString& P);

// Expensive loop-invariant re-verification, driven by the environment switch
// PSM_CHECK_INVARIANTS=1. Intended for small inputs.
bool invariant_checks_enabled();

namespace detail {
// Test-only fault injection: widens one shift so verification harnesses can
// prove they catch a broken engine. Never set in production code.
extern std::atomic<bool> inject_shift_fault;
}  // namespace detail

}  // namespace psm

#endif
