// Acceptance suite: every exit criterion for this project, one line each.
// Run it via ctest or directly; it exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "psm/engine.hpp"
#include "psm/generators.hpp"
#include "psm/match.hpp"
#include "psm/periodicity.hpp"
#include "psm/properties.hpp"
#include "psm/report.hpp"

using namespace psm;
using Clock = std::chrono::steady_clock;

namespace {

const char* kGolden = "ABABBABAABABBABAABBA";

struct Criterion {
  std::string label;
  std::function<void(std::string&)> body;  // sets a message on failure
};

PString byte_string(const char* text, const char* pi) {
  return PString::from_bytes(text, make_byte_partition(pi));
}

struct SweepCase {
  PString text;
  PString pattern;
};

// The randomized search corpus: uniform and periodic texts against patterns
// sampled from the text, block-repetition patterns, uniform noise, and
// parameter-free patterns (which exercise renormalization).
SweepCase make_sweep_case(InstanceGen& gen) {
  const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
  const std::size_t n = gen.between(0, 300);
  const std::size_t m = gen.between(1, 60);
  PString text = gen.chance(0.5) ? gen.uniform_string(alphabet, n)
                                 : gen.periodic_string(alphabet, n, 5);
  switch (gen.below(10)) {
    case 0:
    case 1:
    case 2:
      if (text.size() >= m) {
        const std::size_t at = gen.below(text.size() - m + 1);
        return {text, text.slice(at, at + m)};
      }
      [[fallthrough]];
    case 3:
    case 4:
    case 5:
      return {text, gen.periodic_string(alphabet, m, 4)};
    case 6:
      return {text, gen.constants_only_string(alphabet, m)};
    default:
      return {text, gen.uniform_string(alphabet, m)};
  }
}

std::string show_positions(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (auto p : v) os << p << " ";
  return os.str();
}

void criterion_golden_table(std::string& fail) {
  const auto w = byte_string(kGolden, "AB");
  const std::vector<PrefixPeriodEntry> expected{{1, 4}, {4, 18}};
  if (prefix_periods(w).table.entries() != expected) {
    fail = "one-pass table differs from ((1,4),(4,18))";
    return;
  }
  if (prefix_periods_bruteforce(w) != std::vector<PrefixPeriod>{{1, 4}, {4, 18}}) {
    fail = "reference table differs from ((1,4),(4,18))";
    return;
  }
  const std::vector<std::size_t> row{1, 1, 1, 1,  4,  4,  4,  4,  4,  4,
                                     4, 4, 4, 4,  4,  4,  4,  4,  18, 18};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (shortest_period(w.slice(0, i + 1)) != row[i]) {
      fail = "shortest-period row differs at prefix " + std::to_string(i + 1);
      return;
    }
  }
}

void criterion_worked_example(std::string& fail) {
  const auto x = byte_string("ABaCBCa", "ABC");
  const auto y = PString::from_bytes("BCaACAa", x.partition());
  const auto f = pmatch(x, y);
  const std::vector<std::uint32_t> cycle{1, 2, 0};  // A->B, B->C, C->A
  if (!f || f->mapping() != cycle) {
    fail = "pmatch witness is not the A->B->C->A cycle";
    return;
  }
  const auto w = byte_string("ABaCBCaACAa", "ABC");
  const auto period = is_period(w, 4);
  if (!period || period->f.mapping() != cycle) {
    fail = "period 4 witness is not the A->B->C->A cycle";
    return;
  }
  const auto periods = enumerate_periods(w);
  if (periods.empty() || periods.front() != 4 || shortest_period(w) != 4) {
    fail = "shortest period is not 4";
    return;
  }
}

void criterion_search_oracle(std::string& fail) {
  const std::uint64_t cases = 10000;
  for (std::uint64_t i = 0; i < cases; ++i) {
    InstanceGen gen(90000 + i);
    SweepCase c = make_sweep_case(gen);
    const auto expected = naive_search(c.text, c.pattern);
    const auto got = search(c.text, c.pattern);
    if (got.positions != expected) {
      fail = "case " + std::to_string(90000 + i) + ": engine " +
             show_positions(got.positions) + "vs reference " +
             show_positions(expected);
      return;
    }
  }
}

void criterion_table_oracle(std::string& fail) {
  const std::uint64_t cases = 5000;
  for (std::uint64_t i = 0; i < cases; ++i) {
    InstanceGen gen(170000 + i);
    const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
    const std::size_t m = gen.between(1, 200);
    PString P = gen.chance(0.5) ? gen.layered_periodic_string(alphabet, m)
                                : gen.uniform_string(alphabet, m);
    if (pcs(P).empty()) P = normalize_pattern(P).pattern;
    const auto reference = prefix_periods_bruteforce(P);
    const auto got = prefix_periods(P);
    bool equal = reference.size() == got.table.size();
    for (std::size_t t = 0; equal && t < reference.size(); ++t)
      equal = reference[t].p == got.table[t].val &&
              reference[t].reach == got.table[t].reach;
    if (!equal) {
      fail = "case " + std::to_string(170000 + i) + ": table mismatch (m=" +
             std::to_string(P.size()) + ")";
      return;
    }
    got.table.validate(P.size(), pcs(P).size() + 2);
  }
}

void criterion_periodicity_laws(std::string& fail) {
  const std::uint64_t target = 1000;
  std::vector<PropertyResult> results;
  {
    InstanceGen gen(201);
    results.push_back(check_decomposition_roundtrip(gen, target));
  }
  {
    InstanceGen gen(202);
    results.push_back(check_shift_mismatch(gen, target));
  }
  {
    InstanceGen gen(203);
    results.push_back(check_gcd_commuting_periods(gen, target));
  }
  {
    InstanceGen gen(204);
    results.push_back(check_gcd_long_strings(gen, target));
  }
  {
    InstanceGen gen(205);
    results.push_back(check_short_period_divides(gen, target));
  }
  {
    InstanceGen gen(206);
    results.push_back(check_substring_parameter_sets(gen, target));
  }
  {
    InstanceGen gen(207);
    results.push_back(check_unique_extension(gen, target));
  }
  {
    InstanceGen gen(208);
    results.push_back(check_table_doubling(gen, target));
  }
  {
    InstanceGen gen(209);
    results.push_back(check_reach_definition(gen, target));
  }
  for (const auto& r : results) {
    if (!r.ok()) {
      fail = r.name + ": " + *r.failure;
      return;
    }
    if (r.instances < target) {
      fail = r.name + ": only " + std::to_string(r.instances) + " instances";
      return;
    }
    std::printf("         %-45s %8llu instances\n", r.name.c_str(),
                static_cast<unsigned long long>(r.instances));
  }
}

void criterion_space_bound(std::string& fail) {
  InstanceGen gen(31337);
  const auto alphabet = gen.partition(2, 2);
  for (std::size_t m : {1000u, 10000u, 100000u, 1000000u}) {
    const PString P = gen.layered_periodic_string(alphabet, m);
    const auto norm = normalize_pattern(P);
    const std::size_t run_params = norm.partition->param_count();
    const auto pre = prefix_periods(norm.pattern);
    if (!metrics_within_space_bound(pre.metrics, m, run_params)) {
      fail = "preprocessing peak " + std::to_string(pre.metrics.peak_aux_words) +
             " exceeds budget " + std::to_string(space_bound_words(m, run_params)) +
             " at m=" + std::to_string(m);
      return;
    }
    // a search over text of twice the pattern length must stay in budget too
    const PString T = gen.periodic_string(alphabet, 2 * m, 9);
    const auto run = search(T, P);
    if (!metrics_within_space_bound(run.metrics, m, run_params)) {
      fail = "search peak exceeds budget at m=" + std::to_string(m);
      return;
    }
    std::printf("         m=%-8zu table_entries=%zu peak=%zu budget=%zu\n", m,
                pre.table.size(), run.metrics.peak_aux_words,
                space_bound_words(m, run_params));
  }
}

void criterion_time_bound(std::string& fail) {
  // the randomized corpus again, now asserting the work budget per run
  for (std::uint64_t i = 0; i < 10000; ++i) {
    InstanceGen gen(90000 + i);
    SweepCase c = make_sweep_case(gen);
    const auto got = search(c.text, c.pattern);
    const std::size_t pi_p = pcs(normalize_pattern(c.pattern).pattern).size();
    if (!metrics_within_time_bound(got.metrics, c.text.size(), c.pattern.size(), pi_p)) {
      fail = "work counters exceed the budget on case " + std::to_string(90000 + i);
      return;
    }
  }

  // periodic stress at n = 10^6, plus the doubling check at fixed P
  InstanceGen gen(777);
  const auto alphabet = gen.partition(2, 2);
  const PString P = gen.layered_periodic_string(alphabet, 1000);
  const PString T2 = gen.periodic_string(alphabet, 1000000, 7);
  const PString T1 = T2.slice(0, 500000);
  const auto r1 = search(T1, P);
  const auto r2 = search(T2, P);
  const std::size_t pi_p = pcs(P).size();
  if (!metrics_within_time_bound(r2.metrics, T2.size(), P.size(), pi_p) ||
      !metrics_within_time_bound(r1.metrics, T1.size(), P.size(), pi_p)) {
    fail = "stress run exceeds the work budget";
    return;
  }
  const double ratio = static_cast<double>(r2.metrics.match_calls) /
                       static_cast<double>(r1.metrics.match_calls);
  std::printf("         n=5e5->1e6 match_calls %llu -> %llu (ratio %.3f)\n",
              static_cast<unsigned long long>(r1.metrics.match_calls),
              static_cast<unsigned long long>(r2.metrics.match_calls), ratio);
  if (ratio > 2.2) {
    fail = "doubling the text more than doubled match_calls (+10%): ratio " +
           std::to_string(ratio);
    return;
  }
}

void criterion_bounds_documented(std::string& fail) {
  std::ifstream in(PSM_README_PATH);
  if (!in) {
    fail = "README.md not found";
    return;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string readme = buf.str();
  // The asymptotic claims are validated as explicit budget inequalities; the
  // README must state both budget formulas next to the instructions for
  // re-running them.
  const char* needles[] = {
      "2*ceil(log2(m+1)) + 2*|Pi| + 64",
      "8 * ((|pcs(P)| + 2) * n + m)",
  };
  for (const char* needle : needles) {
    if (readme.find(needle) == std::string::npos) {
      fail = std::string("README.md does not state the budget formula: ") + needle;
      return;
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"golden pattern: table and shortest-period row", criterion_golden_table},
      {"worked example: witness, period, shortest period", criterion_worked_example},
      {"search equals reference on 10000 randomized cases", criterion_search_oracle},
      {"one-pass table equals reference on 5000 patterns", criterion_table_oracle},
      {"periodicity law suites at 1000+ instances each", criterion_periodicity_laws},
      {"space budget at m = 1e3..1e6", criterion_space_bound},
      {"work budget on the corpus and 1e6 stress runs", criterion_time_bound},
      {"budget formulas documented in the README", criterion_bounds_documented},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    std::string fail;
    try {
      criteria[i].body(fail);
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
            .count() /
        1000.0;
    if (fail.empty()) {
      std::printf("[PASS] %zu/%zu %s (%.2fs)\n", i + 1, criteria.size(),
                  criteria[i].label.c_str(), secs);
    } else {
      ++failures;
      std::printf("[FAIL] %zu/%zu %s (%.2fs)\n       %s\n", i + 1, criteria.size(),
                  criteria[i].label.c_str(), secs, fail.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
