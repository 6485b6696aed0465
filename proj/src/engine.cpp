#include "psm/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace psm {

namespace detail {
std::atomic<bool> inject_shift_fault{false};
}

void PrefixPeriodTable::validate(std::size_t pattern_len, std::size_t k) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.val == 0 || e.reach > pattern_len || e.reach < k * e.val)
      throw std::logic_error("prefix period table: entry out of bounds");
    if (i > 0) {
      if (e.val < 2 * entries_[i - 1].val)
        throw std::logic_error("prefix period table: values fail to double");
      if (e.reach <= entries_[i - 1].reach)
        throw std::logic_error("prefix period table: reaches not increasing");
    }
  }
  if (entries_.size() >= 64 ||
      (!entries_.empty() && (std::size_t{1} << entries_.size()) > pattern_len))
    throw std::logic_error("prefix period table: more entries than log2(|P|)");
}

void EngineMetrics::absorb(const EngineMetrics& other) {
  match_calls += other.match_calls;
  loop_iterations += other.loop_iterations;
  count_decrements += other.count_decrements;
  peak_aux_words = std::max(peak_aux_words, other.peak_aux_words);
}

bool invariant_checks_enabled() {
  const char* v = std::getenv("PSM_CHECK_INVARIANTS");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

namespace {

// Core loop shared by preprocessing and search.
//
// Preprocessing runs it over the pattern itself with the window start
// beginning at 1 and the outer guard k*start <= |P|, recording (start,
// frontier) pairs as table entries. Search runs it over the text from 0
// with the guard start + |P| <= |T|, reporting full windows. Everything
// else — extension, the two shift rules, and the table index — is
// identical.
struct CoreRun {
  std::span<const Symbol> text;
  std::span<const Symbol> pattern;
  const AlphabetPartition& alphabet;
  std::span<const std::uint32_t> first;
  std::size_t k;
  bool build_table;
  std::vector<PrefixPeriodEntry>& table;
  const std::function<void(std::size_t)>* on_match;
  EngineMetrics& metrics;
  bool check_invariants;

  void verify_boundary(const MatcherState& st) const {
    const std::size_t len = st.frontier - st.win_start;
    if (!detail::match_ranges(pattern.subspan(0, len),
                              text.subspan(st.win_start, len), alphabet))
      throw std::logic_error("engine invariant broken: window does not match prefix");
    std::ptrdiff_t expect = -1;
    for (std::size_t t = 0; t < table.size(); ++t)
      if (table[t].val * k <= len) expect = static_cast<std::ptrdiff_t>(t);
    if (expect != st.idx)
      throw std::logic_error("engine invariant broken: stale table index");
    if (st.ctx.window_len() != len)
      throw std::logic_error("engine invariant broken: window length drift");
    std::uint64_t params_in_window = 0;
    for (std::size_t u = st.win_start; u < st.frontier; ++u)
      if (alphabet.is_parameter(text[u])) ++params_in_window;
    if (st.ctx.count_sum() != params_in_window)
      throw std::logic_error("engine invariant broken: count drift");
  }

  void run() {
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    MatcherState st{build_table ? 1u : 0u, build_table ? 1u : 0u, -1,
                    ScanContext(first, alphabet)};
    std::size_t max_reach = 0;
    metrics.note_aux(table.size(), alphabet.param_count());

    auto outer_ok = [&] {
      return build_table ? k * st.win_start <= m : st.win_start + m <= n;
    };

    while (outer_ok()) {
      ++metrics.loop_iterations;
      if (check_invariants) verify_boundary(st);

      // Extend the frontier while the window stays equivalent to the
      // pattern prefix.
      for (;;) {
        ++metrics.loop_iterations;
        const std::size_t xlen = st.frontier - st.win_start;
        if (st.frontier >= n || xlen >= m) break;
        ++metrics.match_calls;
        const bool ok = match_extend(
            xlen, pattern[xlen], text[st.frontier], st.ctx,
            [&](std::size_t q) { return text[st.win_start + q]; });
        if (!ok) break;
        st.ctx.extend(text[st.frontier]);
        ++st.frontier;
        if (st.idx + 1 < static_cast<std::ptrdiff_t>(table.size()) &&
            table[static_cast<std::size_t>(st.idx + 1)].val * k <=
                st.frontier - st.win_start)
          ++st.idx;
      }

      const std::size_t len = st.frontier - st.win_start;
      if (build_table) {
        if (st.frontier >= k * st.win_start && st.frontier > max_reach) {
          table.push_back({st.win_start, st.frontier});
          metrics.note_aux(table.size(), alphabet.param_count());
        }
        max_reach = std::max(max_reach, st.frontier);
      } else if (len == m) {
        (*on_match)(st.win_start);
      }

      // Shift. When the table proves the matched region is itself periodic
      // with a known reach, slide by that period and keep the overlap;
      // otherwise drop the window and jump past every start the shift rule
      // excludes.
      if (st.idx >= 0 && static_cast<std::size_t>(st.idx) < table.size() &&
          table[static_cast<std::size_t>(st.idx)].reach >= len && len > 0) {
        const std::size_t shift = table[static_cast<std::size_t>(st.idx)].val;
        for (std::size_t u = st.win_start; u < st.win_start + shift; ++u) {
          ++metrics.count_decrements;
          st.ctx.drop_front(text[u]);
        }
        st.win_start += shift;
      } else {
        for (std::size_t u = st.win_start; u < st.frontier; ++u) {
          ++metrics.count_decrements;
          st.ctx.drop_front(text[u]);
        }
        std::size_t shift = len / k + 1;
        if (detail::inject_shift_fault.load(std::memory_order_relaxed)) shift += 1;
        st.win_start += shift;
        st.frontier = st.win_start;
      }
      while (st.idx >= 0 &&
             table[static_cast<std::size_t>(st.idx)].val * k >
                 st.frontier - st.win_start)
        --st.idx;
    }
  }
};

std::size_t pcs_count(const PString& w) { return pcs(w).size(); }

void require_shared_partition(const PString& T, const PString& P) {
  if (T.partition() != P.partition())
    throw std::invalid_argument("text and pattern use different alphabet partitions");
}

void require_pattern(const PString& P) {
  if (P.empty()) throw std::invalid_argument("pattern must not be empty");
}

}  // namespace

NormalizedPattern normalize_pattern(const PString& P) {
  require_pattern(P);
  if (pcs_count(P) > 0) return {P, P.partition(), false};

  const Symbol chosen = *std::min_element(P.symbols().begin(), P.symbols().end());
  const AlphabetPartition& old = P.alphabet();
  std::vector<Symbol> constants;
  constants.reserve(old.constant_count() + old.param_count() - 1);
  for (Symbol s : old.constants())
    if (s != chosen) constants.push_back(s);
  for (Symbol s : old.parameters()) constants.push_back(s);
  PartitionPtr fresh = make_partition(std::move(constants), {chosen});
  return {PString(std::vector<Symbol>(P.symbols().begin(), P.symbols().end()), fresh),
          fresh, true};
}

PreprocessResult prefix_periods(const PString& P,
                                std::span<const std::uint32_t> first) {
  require_pattern(P);
  const std::size_t params_used = pcs_count(P);
  if (params_used == 0)
    throw std::invalid_argument("prefix_periods: pattern has no parameters");

  PreprocessResult result;
  std::vector<PrefixPeriodEntry> entries;
  CoreRun run{P.symbols(), P.symbols(), P.alphabet(), first,
              params_used + 2,  true,        entries,  nullptr,
              result.metrics,   invariant_checks_enabled()};
  run.run();
  result.table = PrefixPeriodTable(std::move(entries));
  return result;
}

PreprocessResult prefix_periods(const PString& P) {
  const auto first = compute_first(P);
  return prefix_periods(P, first);
}

EngineMetrics search_visit(const PString& T, const PString& P,
                           const std::function<void(std::size_t)>& on_match) {
  require_shared_partition(T, P);
  require_pattern(P);

  EngineMetrics metrics;
  if (P.size() > T.size()) {
    metrics.note_aux(0, 0);  // nothing allocated beyond scalars
    return metrics;
  }

  // Work on a parameter-bearing view of the pattern; plain-text patterns are
  // reinterpreted so the window bookkeeping has something to track.
  NormalizedPattern norm = normalize_pattern(P);
  const PString* text = &T;
  std::optional<PString> rewrapped_text;
  if (norm.changed) {
    rewrapped_text.emplace(
        std::vector<Symbol>(T.symbols().begin(), T.symbols().end()), norm.partition);
    text = &*rewrapped_text;
  }
  const PString& pattern = norm.pattern;

  const auto first = compute_first(pattern);
  PreprocessResult pre = prefix_periods(pattern, first);
  metrics.absorb(pre.metrics);

  std::vector<PrefixPeriodEntry> entries = pre.table.entries();
  CoreRun run{text->symbols(), pattern.symbols(), pattern.alphabet(), first,
              pcs_count(pattern) + 2, false, entries, &on_match,
              metrics, invariant_checks_enabled()};
  run.run();
  return metrics;
}

SearchResult search(const PString& T, const PString& P) {
  SearchResult result;
  result.metrics = search_visit(
      T, P, [&](std::size_t pos) { result.positions.push_back(pos); });
  return result;
}

std::vector<std::size_t> naive_search(const PString& T, const PString& P) {
  require_shared_partition(T, P);
  require_pattern(P);
  std::vector<std::size_t> out;
  if (P.size() > T.size()) return out;
  const auto text = T.symbols();
  const auto pattern = P.symbols();
  for (std::size_t i = 0; i + P.size() <= T.size(); ++i)
    if (detail::match_ranges(text.subspan(i, P.size()), pattern, T.alphabet()))
      out.push_back(i);
  return out;
}

}  // namespace psm
