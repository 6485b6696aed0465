#include "psm/match.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psm {

std::vector<Symbol> pcs(const PString& w) {
  const AlphabetPartition& alphabet = w.alphabet();
  std::vector<bool> seen(alphabet.param_count(), false);
  for (Symbol s : w.symbols())
    if (alphabet.is_parameter(s)) seen[alphabet.param_index(s)] = true;
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(alphabet.param_symbol(i));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

std::optional<PermutationWitness> match_ranges(std::span<const Symbol> x,
                                               std::span<const Symbol> y,
                                               const AlphabetPartition& alphabet) {
  if (x.size() != y.size()) return std::nullopt;
  const std::size_t nparams = alphabet.param_count();
  constexpr std::uint32_t kFree = 0xffffffffu;
  std::vector<std::uint32_t> fwd(nparams, kFree);  // x-param -> y-param
  std::vector<std::uint32_t> bwd(nparams, kFree);  // y-param -> x-param

  for (std::size_t i = 0; i < x.size(); ++i) {
    const Symbol a = x[i];
    const Symbol b = y[i];
    if (alphabet.is_constant(a)) {
      if (a != b) return std::nullopt;
      continue;
    }
    if (!alphabet.is_parameter(b)) return std::nullopt;
    const auto ai = static_cast<std::uint32_t>(alphabet.param_index(a));
    const auto bi = static_cast<std::uint32_t>(alphabet.param_index(b));
    if (fwd[ai] == kFree && bwd[bi] == kFree) {
      fwd[ai] = bi;
      bwd[bi] = ai;
    } else if (fwd[ai] != bi) {
      return std::nullopt;
    }
  }

  // Complete unconstrained parameters: smallest free image first.
  std::size_t next_free = 0;
  for (std::size_t i = 0; i < nparams; ++i) {
    if (fwd[i] != kFree) continue;
    while (next_free < nparams && bwd[next_free] != kFree) ++next_free;
    fwd[i] = static_cast<std::uint32_t>(next_free);
    bwd[next_free] = static_cast<std::uint32_t>(i);
  }
  return PermutationWitness(std::move(fwd));
}

}  // namespace detail

std::optional<PermutationWitness> pmatch(const PString& x, const PString& y) {
  if (x.partition() != y.partition())
    throw std::invalid_argument("pmatch: strings use different alphabet partitions");
  return detail::match_ranges(x.symbols(), y.symbols(), x.alphabet());
}

std::vector<std::uint32_t> compute_first(const PString& P) {
  const AlphabetPartition& alphabet = P.alphabet();
  const auto absent = static_cast<std::uint32_t>(P.size());
  std::vector<std::uint32_t> first(alphabet.param_count(), absent);
  for (std::size_t i = 0; i < P.size(); ++i) {
    const Symbol s = P[i];
    if (!alphabet.is_parameter(s)) continue;
    std::uint32_t& slot = first[alphabet.param_index(s)];
    if (slot == absent) slot = static_cast<std::uint32_t>(i);
  }
  return first;
}

std::vector<PrevToken> prev_encode(const PString& w) {
  const AlphabetPartition& alphabet = w.alphabet();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last(alphabet.param_count(), kNone);
  std::vector<PrevToken> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Symbol s = w[i];
    if (alphabet.is_constant(s)) {
      out.push_back({PrevToken::Kind::Constant, s});
      continue;
    }
    const std::size_t idx = alphabet.param_index(s);
    const std::uint64_t dist = last[idx] == kNone ? 0 : i - last[idx];
    out.push_back({PrevToken::Kind::Distance, dist});
    last[idx] = i;
  }
  return out;
}

std::uint64_t ScanContext::count_sum() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

}  // namespace psm
