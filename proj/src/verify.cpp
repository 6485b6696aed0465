#include "psm/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "psm/engine.hpp"
#include "psm/generators.hpp"
#include "psm/periodicity.hpp"
#include "psm/properties.hpp"

namespace psm {

namespace {

std::string render(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out += describe_symbol(s);
  return out;
}

std::string render_positions(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return v.empty() ? std::string("(none)") : os.str();
}

struct CaseInputs {
  PartitionPtr alphabet;
  PString text;
  PString pattern;
};

// Pattern styles rotate so the sweep hits the interesting regimes: patterns
// sampled from the text (matches guaranteed), periodic patterns, uniform
// noise, and parameter-free patterns that exercise the renormalization path.
CaseInputs make_search_case(InstanceGen& gen, const VerifyOptions& opt) {
  const auto alphabet =
      gen.partition(gen.between(1, opt.max_sigma), gen.between(1, opt.max_pi));
  const std::size_t n = gen.between(0, opt.max_n);
  const std::size_t m = gen.between(1, opt.max_m);

  PString text = gen.chance(0.5) ? gen.uniform_string(alphabet, n)
                                 : gen.periodic_string(alphabet, n, 5);

  switch (gen.below(10)) {
    case 0:
    case 1:
    case 2: {  // slice of the text, so occurrences exist
      if (text.size() >= m) {
        const std::size_t at = gen.below(text.size() - m + 1);
        return {alphabet, text, text.slice(at, at + m)};
      }
      [[fallthrough]];
    }
    case 3:
    case 4:
    case 5:
      return {alphabet, text, gen.periodic_string(alphabet, m, 4)};
    case 6: {  // no parameters: forces the pattern renormalization path
      return {alphabet, text, gen.constants_only_string(alphabet, m)};
    }
    default:
      return {alphabet, text, gen.uniform_string(alphabet, m)};
  }
}

bool search_case_fails(const PString& text, const PString& pattern, std::string* detail) {
  const auto expected = naive_search(text, pattern);
  const auto got = search(text, pattern);
  if (expected == got.positions) return false;
  if (detail) {
    *detail = "reference: " + render_positions(expected) +
              "\nengine:    " + render_positions(got.positions);
  }
  return true;
}

bool table_case_fails(const PString& pattern, std::string* detail) {
  const auto reference = prefix_periods_bruteforce(pattern);
  const auto got = prefix_periods(pattern).table;
  const bool equal =
      reference.size() == got.size() &&
      std::equal(reference.begin(), reference.end(), got.entries().begin(),
                 [](const PrefixPeriod& a, const PrefixPeriodEntry& b) {
                   return a.p == b.val && a.reach == b.reach;
                 });
  if (equal) return false;
  if (detail) {
    std::ostringstream os;
    os << "reference:";
    for (const auto& e : reference) os << " (" << e.p << "," << e.reach << ")";
    os << "\nengine:   ";
    for (const auto& e : got.entries()) os << " (" << e.val << "," << e.reach << ")";
    *detail = os.str();
  }
  return true;
}

// Greedy shrink: repeatedly try chopping halves then single symbols off
// either end of T and P, keeping any candidate that still fails.
void shrink_search_case(PString& text, PString& pattern) {
  bool progress = true;
  while (progress) {
    progress = false;
    const std::size_t n = text.size();
    const std::size_t cuts[] = {n / 2, 1};
    for (std::size_t cut : cuts) {
      if (cut == 0 || cut > text.size()) continue;
      PString front = text.slice(cut, text.size());
      if (search_case_fails(front, pattern, nullptr)) {
        text = std::move(front);
        progress = true;
        continue;
      }
      PString back = text.slice(0, text.size() - cut);
      if (search_case_fails(back, pattern, nullptr)) {
        text = std::move(back);
        progress = true;
      }
    }
    if (pattern.size() > 1) {
      PString shorter = pattern.slice(0, pattern.size() - 1);
      if (search_case_fails(text, shorter, nullptr)) {
        pattern = std::move(shorter);
        progress = true;
      }
    }
  }
}

void shrink_table_case(PString& pattern) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t cut : {pattern.size() / 2, std::size_t{1}}) {
      if (cut == 0 || cut >= pattern.size()) continue;
      PString shorter = pattern.slice(0, pattern.size() - cut);
      if (!pcs(shorter).empty() && table_case_fails(shorter, nullptr)) {
        pattern = std::move(shorter);
        progress = true;
        break;
      }
    }
  }
}

Reproducer make_reproducer(const std::string& kind, std::uint64_t case_seed,
                           const AlphabetPartition& alphabet, const PString* text,
                           const PString* pattern, std::string detail) {
  Reproducer r;
  r.kind = kind;
  r.case_seed = case_seed;
  r.sigma = render(alphabet.constants());
  r.pi = render(alphabet.parameters());
  if (text) r.text = text->display();
  if (pattern) r.pattern = pattern->display();
  r.detail = std::move(detail);
  return r;
}

}  // namespace

std::string Reproducer::to_string() const {
  std::ostringstream os;
  os << "kind: " << kind << "\ncase seed: " << case_seed << "\nsigma: " << sigma
     << "\npi: " << pi << "\n";
  if (!text.empty() || kind == "search-oracle") os << "T: " << text << "\n";
  if (!pattern.empty()) os << "P: " << pattern << "\n";
  if (!detail.empty()) os << detail << "\n";
  return os.str();
}

VerifyOutcome run_verification(const VerifyOptions& options, std::ostream* log) {
  VerifyOutcome outcome;
  for (std::uint64_t i = 0; i < options.cases; ++i) {
    const std::uint64_t case_seed = options.seed + i;
    InstanceGen gen(case_seed);
    ++outcome.cases_run;

    if (log && options.cases >= 20 && i % (options.cases / 10) == 0)
      *log << "verify: case " << i << "/" << options.cases << "\n";

    // Search and table equivalence dominate the rotation; every eighth case
    // runs one periodicity law check instead.
    const std::uint64_t slot = i % 8;
    if (slot < 5) {
      CaseInputs c = make_search_case(gen, options);
      std::string detail;
      if (search_case_fails(c.text, c.pattern, &detail)) {
        shrink_search_case(c.text, c.pattern);
        search_case_fails(c.text, c.pattern, &detail);
        outcome.failure = make_reproducer("search-oracle", case_seed, *c.alphabet,
                                          &c.text, &c.pattern, detail);
        return outcome;
      }
    } else if (slot < 7) {
      const auto alphabet =
          gen.partition(gen.between(1, options.max_sigma), gen.between(1, options.max_pi));
      const std::size_t m = gen.between(1, std::max<std::size_t>(2, options.max_m));
      PString pattern = gen.chance(0.6) ? gen.layered_periodic_string(alphabet, m)
                                        : gen.uniform_string(alphabet, m);
      if (pcs(pattern).empty()) pattern = normalize_pattern(pattern).pattern;
      std::string detail;
      if (table_case_fails(pattern, &detail)) {
        shrink_table_case(pattern);
        table_case_fails(pattern, &detail);
        outcome.failure = make_reproducer("prefix-period-table", case_seed,
                                          pattern.alphabet(), nullptr, &pattern, detail);
        return outcome;
      }
    } else {
      PropertyResult res;
      switch ((i / 8) % 5) {
        case 0: res = check_decomposition_roundtrip(gen, 1); break;
        case 1: res = check_shift_mismatch(gen, 1); break;
        case 2: res = check_short_period_divides(gen, 1); break;
        case 3: res = check_unique_extension(gen, 1); break;
        default: res = check_reach_definition(gen, 1); break;
      }
      if (!res.ok()) {
        Reproducer r;
        r.kind = "periodicity-law: " + res.name;
        r.case_seed = case_seed;
        r.detail = *res.failure;
        outcome.failure = r;
        return outcome;
      }
    }
  }
  return outcome;
}

}  // namespace psm
