#ifndef PSM_MATCH_HPP
#define PSM_MATCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psm/pstring.hpp"
#include "psm/witness.hpp"

namespace psm {

// Distinct parameter symbols occurring in w, ascending.
std::vector<Symbol> pcs(const PString& w);

namespace detail {
// Match test on raw symbol ranges sharing one alphabet. Returns a witness f
// with f(x) = y, or nothing. Unconstrained parameters are completed with the
// smallest free image index so the witness is deterministic.
std::optional<PermutationWitness> match_ranges(std::span<const Symbol> x,
                                               std::span<const Symbol> y,
                                               const AlphabetPartition& alphabet);
}  // namespace detail

// Whether x and y are equivalent up to a bijective renaming of parameters.
// Returns the witness f with f(x) = y. Both strings must share one partition
// object; passing different partitions throws std::invalid_argument.
std::optional<PermutationWitness> pmatch(const PString& x, const PString& y);

// first[i] = position of the first occurrence of parameter i in P, or |P| if
// the parameter does not occur. One pass, one word per parameter.
std::vector<std::uint32_t> compute_first(const PString& P);

// One element of a prev-encoding: either a constant symbol (fixed point) or
// the distance to the previous occurrence of the same parameter (0 at its
// first occurrence).
struct PrevToken {
  enum class Kind : std::uint8_t { Constant, Distance };
  Kind kind;
  std::uint64_t value;
  bool operator==(const PrevToken&) const = default;
};

// Canonical form: two strings p-match iff their encodings are equal. Used as
// an independent check, not on the engine's hot path.
std::vector<PrevToken> prev_encode(const PString& w);

// Scan state for constant-time match extension: the pattern's first-occurrence
// table plus occurrence counts over the current text window. One context per
// in-flight scan; not shared.
class ScanContext {
 public:
  ScanContext(std::span<const std::uint32_t> first, const AlphabetPartition& alphabet)
      : first_(first), counts_(alphabet.param_count(), 0), alphabet_(&alphabet) {}

  // Window grows by one symbol at the back.
  void extend(Symbol s) {
    if (alphabet_->is_parameter(s)) ++counts_[alphabet_->param_index(s)];
    ++window_len_;
  }

  // Window loses its front symbol. Counts are unsigned and deliberately
  // unchecked; a desynchronized caller gets wrong answers, not UB.
  void drop_front(Symbol s) {
    if (alphabet_->is_parameter(s)) --counts_[alphabet_->param_index(s)];
    --window_len_;
  }

  void reset() {
    counts_.assign(counts_.size(), 0);
    window_len_ = 0;
  }

  std::uint32_t first_of(std::size_t param_index) const { return first_[param_index]; }
  std::uint64_t count_of(std::size_t param_index) const { return counts_[param_index]; }
  std::size_t window_len() const { return window_len_; }
  std::span<const std::uint32_t> first() const { return first_; }
  const AlphabetPartition& alphabet() const { return *alphabet_; }
  std::uint64_t count_sum() const;

 private:
  std::span<const std::uint32_t> first_;
  std::vector<std::uint64_t> counts_;
  const AlphabetPartition* alphabet_;
  std::size_t window_len_ = 0;
};

// Decides x·a ≡ y·b in constant time, given that x ≡ y already holds, where
// x = P[0:xlen], ctx.first describes P and ctx counts the window y. y_at(q)
// must return y[q] for q < xlen. The three cases:
//   1. a is a constant: b must equal a.
//   2. a is a parameter not occurring in x: b must be a parameter absent
//      from y.
//   3. a is a parameter occurring first at position t < xlen: b must equal
//      y[t].
template <typename YAt>
bool match_extend(std::size_t xlen, Symbol a, Symbol b, const ScanContext& ctx,
                  YAt&& y_at) {
  const AlphabetPartition& alphabet = ctx.alphabet();
  if (alphabet.is_constant(a)) return a == b;
  const std::size_t a_idx = alphabet.param_index(a);
  const std::uint32_t first_a = ctx.first_of(a_idx);
  if (first_a >= xlen)
    return alphabet.is_parameter(b) && ctx.count_of(alphabet.param_index(b)) == 0;
  return y_at(first_a) == b;
}

}  // namespace psm

#endif
