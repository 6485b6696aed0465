#ifndef PSM_PROPERTIES_HPP
#define PSM_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "psm/generators.hpp"

namespace psm {

// Randomized checks of the periodicity laws the engine relies on. Each check
// generates instances until `target` of them satisfy the law's precondition
// non-vacuously, then reports how many it exercised. Generation is biased
// toward short periodic strings over small alphabets so the preconditions
// actually fire.
struct PropertyResult {
  std::string name;
  std::uint64_t instances = 0;
  std::optional<std::string> failure;
  bool ok() const { return !failure.has_value(); }
};

// Rebuilding a string from its period decomposition restores it exactly.
PropertyResult check_decomposition_roundtrip(InstanceGen& gen, std::uint64_t target);

// For equivalent x and y, sliding by less than y's shortest period never
// re-aligns: x[d:] cannot match y[:-d] for 0 < d < per(y).
PropertyResult check_shift_mismatch(InstanceGen& gen, std::uint64_t target);

// Two periods p, q with commuting witnesses and |w| >= p+q force gcd(p, q)
// to be a period as well.
PropertyResult check_gcd_commuting_periods(InstanceGen& gen, std::uint64_t target);

// The same conclusion without commutativity once
// |w| >= p + q + min(p,q)*(|pcs(w)|-1).
PropertyResult check_gcd_long_strings(InstanceGen& gen, std::uint64_t target);

// A period q <= |w|/(|pcs(w)|+1) is a multiple of the shortest period.
PropertyResult check_short_period_divides(InstanceGen& gen, std::uint64_t target);

// Substrings of length >= per(w)*|pcs(w)| see every parameter of w; length
// >= per(w)*(|pcs(w)|-1) misses at most one.
PropertyResult check_substring_parameter_sets(InstanceGen& gen, std::uint64_t target);

// When p <= |w|/(|pcs(w)|+1), exactly one extension symbol keeps p a period,
// among the constants, the parameters of w, and one fresh parameter.
PropertyResult check_unique_extension(InstanceGen& gen, std::uint64_t target);

// Consecutive prefix periods at least double, so a pattern of length m has
// at most log2(m) of them. Checked on the reference table.
PropertyResult check_table_doubling(InstanceGen& gen, std::uint64_t target);

// reach(w, p) >= r holds exactly when w[0:r] has period p, for all
// r in [p, |w|].
PropertyResult check_reach_definition(InstanceGen& gen, std::uint64_t target);

}  // namespace psm

#endif
