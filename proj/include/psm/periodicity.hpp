#ifndef PSM_PERIODICITY_HPP
#define PSM_PERIODICITY_HPP

#include <optional>
#include <vector>

#include "psm/match.hpp"
#include "psm/pstring.hpp"
#include "psm/witness.hpp"

namespace psm {

// Everything in this header is a definitional reference implementation.
// Quadratic-or-worse cost is accepted on purpose: these routines exist to be
// obviously correct and to check the fast engine, not to compete with it.

// p is a period of w when w[0:|w|-p] p-matches w[p:|w|]; f maps the prefix
// onto the suffix.
struct PeriodWitness {
  std::size_t p;
  PermutationWitness f;
};

// The repetition structure induced by a period: w is v, f(v), f^2(v), ...
// truncated to |w|. pieces holds floor(|w|/p) full blocks followed by the
// final partial block when |w| mod p > 0.
struct DecompositionView {
  PString v;
  std::vector<PString> pieces;
  std::size_t length;
  std::size_t period;
  double rho() const { return static_cast<double>(length) / static_cast<double>(period); }
};

// Witness for p being a period of w, or nothing. Pre: 1 <= p <= |w|.
std::optional<PeriodWitness> is_period(const PString& w, std::size_t p);

// Least period. Pre: |w| >= 1. Always exists since |w| is a period.
std::size_t shortest_period(const PString& w);

// Longest prefix length r <= |w| such that w[0:r] has period p; at least p.
// Pre: 1 <= p <= |w|.
std::size_t reach(const PString& w, std::size_t p);

// All periods of w. Pre: |w| >= 1.
std::vector<std::size_t> enumerate_periods(const PString& w);

// All permutations f with f(w[0:|w|-p]) = w[p:|w|]. Exhaustive over the
// parameter alphabet; guarded to small alphabets.
std::vector<PermutationWitness> enumerate_period_witnesses(const PString& w,
                                                           std::size_t p);

struct PrefixPeriod {
  std::size_t p;
  std::size_t reach;
  bool operator==(const PrefixPeriod&) const = default;
};

// All p such that some prefix w' of w has shortest period p with
// k*p <= |w'|, where k = |pcs(w)|+2, paired with reach(w, p), ascending.
// Enumerates every prefix directly. Pre: pcs(w) is non-empty.
std::vector<PrefixPeriod> prefix_periods_bruteforce(const PString& w);

// Rebuilds w's repetition structure from a valid period witness. Throws
// std::invalid_argument when the witness does not hold for w.
DecompositionView decompose(const PString& w, const PeriodWitness& witness);

}  // namespace psm

#endif
