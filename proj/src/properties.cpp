#include "psm/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "psm/match.hpp"
#include "psm/periodicity.hpp"

namespace psm {

namespace {

constexpr std::uint64_t kAttemptFactor = 400;

std::string describe_instance(const PString& w) {
  std::ostringstream os;
  os << "w=" << w.display() << " pi=";
  for (Symbol s : w.alphabet().parameters()) os << describe_symbol(s);
  os << " sigma=";
  for (Symbol s : w.alphabet().constants()) os << describe_symbol(s);
  return os.str();
}

bool contains(const std::vector<std::size_t>& periods, std::size_t p) {
  return std::find(periods.begin(), periods.end(), p) != periods.end();
}

PString random_structured(InstanceGen& gen, std::size_t max_len) {
  const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 3));
  const std::size_t len = gen.between(2, max_len);
  switch (gen.below(3)) {
    case 0:
      return gen.uniform_string(alphabet, len);
    case 1:
      return gen.periodic_string(alphabet, len, 4);
    default:
      return gen.layered_periodic_string(alphabet, len);
  }
}

template <typename Body>
PropertyResult drive(std::string name, std::uint64_t target, Body&& body) {
  PropertyResult result;
  result.name = std::move(name);
  const std::uint64_t max_attempts = std::max<std::uint64_t>(1, target) * kAttemptFactor;
  for (std::uint64_t attempt = 0;
       attempt < max_attempts && result.instances < target && result.ok(); ++attempt)
    body(result);
  if (result.ok() && result.instances < target)
    result.failure = "generator starvation: only " + std::to_string(result.instances) +
                     " of " + std::to_string(target) + " instances reached";
  return result;
}

}  // namespace

PropertyResult check_decomposition_roundtrip(InstanceGen& gen, std::uint64_t target) {
  return drive("decomposition round-trip", target, [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
    const PString w = gen.periodic_string(alphabet, gen.between(1, 48), 6);
    const auto periods = enumerate_periods(w);
    const std::size_t p = periods[gen.below(periods.size())];
    const auto witness = is_period(w, p);
    if (!witness) {
      res.failure = "enumerate_periods and is_period disagree: " + describe_instance(w) +
                    " p=" + std::to_string(p);
      return;
    }
    const DecompositionView view = decompose(w, *witness);
    std::vector<Symbol> rebuilt;
    for (const PString& piece : view.pieces)
      rebuilt.insert(rebuilt.end(), piece.symbols().begin(), piece.symbols().end());
    std::size_t full_pieces = 0;
    for (const PString& piece : view.pieces)
      if (piece.size() == p) ++full_pieces;
    const bool sizes_ok = full_pieces == w.size() / p &&
                          view.pieces.size() == w.size() / p + (w.size() % p ? 1 : 0);
    if (!sizes_ok || !(PString(std::move(rebuilt), alphabet) == w)) {
      res.failure = "decomposition failed to rebuild " + describe_instance(w) +
                    " p=" + std::to_string(p);
      return;
    }
    ++res.instances;
  });
}

PropertyResult check_shift_mismatch(InstanceGen& gen, std::uint64_t target) {
  return drive("shift inside shortest period mismatches", target,
               [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
    const PString x = gen.chance(0.5) ? gen.periodic_string(alphabet, gen.between(2, 40), 4)
                                      : gen.uniform_string(alphabet, gen.between(2, 40));
    const PString y = apply(gen.permutation(alphabet->param_count()), x);
    const std::size_t sp = shortest_period(y);
    for (std::size_t delta = 1; delta < sp; ++delta) {
      if (pmatch(x.slice(delta, x.size()), y.slice(0, y.size() - delta))) {
        res.failure = "shifted windows matched: x=" + x.display() +
                      " y=" + y.display() + " delta=" + std::to_string(delta);
        return;
      }
      ++res.instances;
    }
  });
}

PropertyResult check_gcd_commuting_periods(InstanceGen& gen, std::uint64_t target) {
  return drive("gcd of commuting periods is a period", target,
               [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 2), gen.between(1, 3));
    const PString w = gen.periodic_string(alphabet, gen.between(4, 40), 4);
    const auto periods = enumerate_periods(w);
    std::map<std::size_t, std::vector<PermutationWitness>> witnesses;
    for (std::size_t p : periods)
      if (p + periods.front() <= w.size())
        witnesses[p] = enumerate_period_witnesses(w, p);

    for (std::size_t a = 0; a < periods.size(); ++a) {
      for (std::size_t b = a; b < periods.size(); ++b) {
        const std::size_t p = periods[a], q = periods[b];
        if (p + q > w.size()) continue;
        bool commuting_pair = false;
        for (const auto& f : witnesses[p]) {
          for (const auto& g : witnesses[q]) {
            if (f.commutes_with(g)) {
              commuting_pair = true;
              break;
            }
          }
          if (commuting_pair) break;
        }
        if (!commuting_pair) continue;
        if (!contains(periods, std::gcd(p, q))) {
          res.failure = "gcd " + std::to_string(std::gcd(p, q)) +
                        " is not a period: " + describe_instance(w) +
                        " p=" + std::to_string(p) + " q=" + std::to_string(q);
          return;
        }
        ++res.instances;
      }
    }
  });
}

PropertyResult check_gcd_long_strings(InstanceGen& gen, std::uint64_t target) {
  return drive("gcd of periods in long strings", target, [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
    const PString w = gen.periodic_string(alphabet, gen.between(4, 48), 4);
    const std::size_t params_used = pcs(w).size();
    if (params_used == 0) return;
    const auto periods = enumerate_periods(w);
    for (std::size_t a = 0; a < periods.size(); ++a) {
      for (std::size_t b = a; b < periods.size(); ++b) {
        const std::size_t p = periods[a], q = periods[b];
        if (w.size() < p + q + std::min(p, q) * (params_used - 1)) continue;
        if (!contains(periods, std::gcd(p, q))) {
          res.failure = "gcd " + std::to_string(std::gcd(p, q)) +
                        " is not a period: " + describe_instance(w) +
                        " p=" + std::to_string(p) + " q=" + std::to_string(q);
          return;
        }
        ++res.instances;
      }
    }
  });
}

PropertyResult check_short_period_divides(InstanceGen& gen, std::uint64_t target) {
  return drive("short periods are multiples of the shortest", target,
               [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
    const PString w = gen.periodic_string(alphabet, gen.between(2, 48), 4);
    const std::size_t params_used = pcs(w).size();
    if (params_used == 0) return;
    const auto periods = enumerate_periods(w);
    const std::size_t sp = periods.front();
    for (std::size_t q : periods) {
      if (q * (params_used + 1) > w.size()) continue;
      if (q % sp != 0) {
        res.failure = "period " + std::to_string(q) + " not divisible by " +
                      std::to_string(sp) + ": " + describe_instance(w);
        return;
      }
      ++res.instances;
    }
  });
}

PropertyResult check_substring_parameter_sets(InstanceGen& gen, std::uint64_t target) {
  return drive("long substrings preserve the parameter set", target,
               [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 2), gen.between(1, 4));
    const PString w = gen.periodic_string(alphabet, gen.between(2, 36), 3);
    const auto full_set = pcs(w);
    if (full_set.empty()) return;
    const std::size_t sp = shortest_period(w);
    const std::size_t strong = sp * full_set.size();
    const std::size_t weak = sp * (full_set.size() - 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        const std::size_t len = j - i;
        if (len < weak) continue;
        const auto sub_set = pcs(w.slice(i, j));
        if (len >= strong && sub_set != full_set) {
          res.failure = "substring [" + std::to_string(i) + "," + std::to_string(j) +
                        ") lost parameters: " + describe_instance(w);
          return;
        }
        if (sub_set.size() + 1 < full_set.size()) {
          res.failure = "substring [" + std::to_string(i) + "," + std::to_string(j) +
                        ") lost more than one parameter: " + describe_instance(w);
          return;
        }
        ++res.instances;
      }
    }
  });
}

PropertyResult check_unique_extension(InstanceGen& gen, std::uint64_t target) {
  return drive("short periods extend by exactly one symbol", target,
               [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 3), gen.between(1, 4));
    const PString w = gen.periodic_string(alphabet, gen.between(2, 48), 4);
    const auto params_used = pcs(w);
    const auto periods = enumerate_periods(w);
    for (std::size_t p : periods) {
      if (p * (params_used.size() + 1) > w.size()) continue;

      std::vector<Symbol> candidates = alphabet->constants();
      candidates.insert(candidates.end(), params_used.begin(), params_used.end());
      for (Symbol s : alphabet->parameters()) {
        if (std::find(params_used.begin(), params_used.end(), s) == params_used.end()) {
          candidates.push_back(s);  // one fresh parameter
          break;
        }
      }

      std::size_t extensions = 0;
      for (Symbol a : candidates) {
        std::vector<Symbol> grown(w.symbols().begin(), w.symbols().end());
        grown.push_back(a);
        if (is_period(PString(std::move(grown), alphabet), p)) ++extensions;
      }
      if (extensions != 1) {
        res.failure = std::to_string(extensions) + " extensions keep period " +
                      std::to_string(p) + ": " + describe_instance(w);
        return;
      }
      ++res.instances;
    }
  });
}

PropertyResult check_table_doubling(InstanceGen& gen, std::uint64_t target) {
  return drive("prefix periods double and stay logarithmic", target,
               [&](PropertyResult& res) {
    const auto alphabet = gen.partition(gen.between(1, 2), gen.between(1, 3));
    const std::size_t len = gen.between(8, 120);
    const PString w = gen.chance(0.7) ? gen.layered_periodic_string(alphabet, len)
                                      : gen.uniform_string(alphabet, len);
    if (pcs(w).empty()) return;
    const auto table = prefix_periods_bruteforce(w);
    if (!table.empty() && (std::size_t{1} << table.size()) > w.size()) {
      res.failure = "table longer than log2(|w|): " + describe_instance(w);
      return;
    }
    for (std::size_t i = 1; i < table.size(); ++i) {
      if (table[i].p < 2 * table[i - 1].p) {
        res.failure = "prefix periods " + std::to_string(table[i - 1].p) + "," +
                      std::to_string(table[i].p) + " fail to double: " +
                      describe_instance(w);
        return;
      }
      if (table[i].reach <= table[i - 1].reach) {
        res.failure = "reaches not increasing: " + describe_instance(w);
        return;
      }
    }
    if (table.size() >= 2) ++res.instances;
  });
}

PropertyResult check_reach_definition(InstanceGen& gen, std::uint64_t target) {
  return drive("reach agrees with prefix period tests", target,
               [&](PropertyResult& res) {
    const PString w = random_structured(gen, 40);
    const std::size_t p = gen.between(1, w.size());
    const std::size_t r_star = reach(w, p);
    for (std::size_t r = p; r <= w.size(); ++r) {
      const bool by_reach = r_star >= r;
      const bool by_test = is_period(w.slice(0, r), p).has_value();
      if (by_reach != by_test) {
        res.failure = "reach mismatch at r=" + std::to_string(r) + " p=" +
                      std::to_string(p) + ": " + describe_instance(w);
        return;
      }
    }
    ++res.instances;
  });
}

}  // namespace psm
