#include "psm/periodicity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psm {

namespace {

void require_period_range(const PString& w, std::size_t p) {
  if (p == 0 || p > w.size())
    throw std::out_of_range("period must satisfy 1 <= p <= |w|");
}

// Period test on a prefix w[0:len] without materializing slices.
std::optional<PermutationWitness> prefix_period_witness(const PString& w,
                                                        std::size_t len,
                                                        std::size_t p) {
  auto syms = w.symbols();
  return detail::match_ranges(syms.subspan(0, len - p), syms.subspan(p, len - p),
                              w.alphabet());
}

}  // namespace

std::optional<PeriodWitness> is_period(const PString& w, std::size_t p) {
  require_period_range(w, p);
  auto f = prefix_period_witness(w, w.size(), p);
  if (!f) return std::nullopt;
  return PeriodWitness{p, std::move(*f)};
}

std::size_t shortest_period(const PString& w) {
  if (w.empty()) throw std::invalid_argument("shortest_period: empty string");
  for (std::size_t p = 1; p < w.size(); ++p)
    if (prefix_period_witness(w, w.size(), p)) return p;
  return w.size();
}

std::size_t reach(const PString& w, std::size_t p) {
  require_period_range(w, p);
  std::size_t best = p;  // the length-p prefix has period p vacuously
  for (std::size_t r = p + 1; r <= w.size(); ++r)
    if (prefix_period_witness(w, r, p)) best = r;
  return best;
}

std::vector<std::size_t> enumerate_periods(const PString& w) {
  if (w.empty()) throw std::invalid_argument("enumerate_periods: empty string");
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= w.size(); ++p)
    if (prefix_period_witness(w, w.size(), p)) out.push_back(p);
  return out;
}

std::vector<PermutationWitness> enumerate_period_witnesses(const PString& w,
                                                           std::size_t p) {
  require_period_range(w, p);
  const std::size_t nparams = w.alphabet().param_count();
  if (nparams > 8)
    throw std::invalid_argument("enumerate_period_witnesses: alphabet too large");
  std::vector<std::uint32_t> perm(nparams);
  std::iota(perm.begin(), perm.end(), 0u);
  const PString prefix = w.slice(0, w.size() - p);
  const PString suffix = w.slice(p, w.size());
  std::vector<PermutationWitness> out;
  do {
    PermutationWitness f{std::vector<std::uint32_t>(perm)};
    if (apply(f, prefix) == suffix) out.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<PrefixPeriod> prefix_periods_bruteforce(const PString& w) {
  const std::size_t param_count_in_w = pcs(w).size();
  if (param_count_in_w == 0)
    throw std::invalid_argument(
        "prefix_periods_bruteforce: string contains no parameters");
  const std::size_t k = param_count_in_w + 2;

  std::vector<std::size_t> found;
  for (std::size_t len = 1; len <= w.size(); ++len) {
    // Shortest period of the prefix w[0:len], definitionally.
    std::size_t sp = len;
    for (std::size_t p = 1; p < len; ++p) {
      if (prefix_period_witness(w, len, p)) {
        sp = p;
        break;
      }
    }
    if (k * sp <= len && std::find(found.begin(), found.end(), sp) == found.end())
      found.push_back(sp);
  }

  std::sort(found.begin(), found.end());
  std::vector<PrefixPeriod> out;
  out.reserve(found.size());
  for (std::size_t p : found) out.push_back({p, reach(w, p)});
  return out;
}

DecompositionView decompose(const PString& w, const PeriodWitness& witness) {
  require_period_range(w, witness.p);
  const PString head = w.slice(0, w.size() - witness.p);
  const PString tail = w.slice(witness.p, w.size());
  if (!(apply(witness.f, head) == tail))
    throw std::invalid_argument("decompose: witness does not hold for the string");

  const std::size_t p = witness.p;
  DecompositionView view{w.slice(0, p), {}, w.size(), p};
  const std::size_t full = w.size() / p;
  const std::size_t rest = w.size() % p;
  PString block = view.v;
  for (std::size_t t = 0; t < full; ++t) {
    view.pieces.push_back(block);
    if (t + 1 < full || rest > 0) block = apply(witness.f, block);
  }
  if (rest > 0) view.pieces.push_back(block.slice(0, rest));
  return view;
}

}  // namespace psm
