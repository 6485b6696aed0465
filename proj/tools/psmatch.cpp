// psmatch: parameterized pattern matching over byte text or token streams
// with a sublinear-extra-space engine. Subcommands: search, periods, verify,
// bench, tokenize.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "psm/engine.hpp"
#include "psm/generators.hpp"
#include "psm/periodicity.hpp"
#include "psm/report.hpp"
#include "psm/tokenizer.hpp"
#include "psm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw UsageError("error while reading: " + path);
  return std::move(buf).str();
}

struct AlphabetSpec {
  std::string mode = "byte";  // byte | token
  std::string pi_chars;
};

struct LoadedInputs {
  psm::PString text;
  psm::PString pattern;
  // token mode only: source locations for decoding match positions
  std::optional<psm::TokenCorpus> corpus;
  std::size_t text_id = 0;
};

LoadedInputs load_inputs(const std::string& text_path, const std::string& pattern_path,
                         const AlphabetSpec& spec) {
  const std::string text_bytes = read_file(text_path);
  const std::string pattern_bytes = read_file(pattern_path);
  if (spec.mode == "byte") {
    auto alphabet = psm::make_byte_partition(spec.pi_chars);
    return {psm::PString::from_bytes(text_bytes, alphabet),
            psm::PString::from_bytes(pattern_bytes, alphabet), std::nullopt, 0};
  }
  psm::TokenCorpus corpus;
  const std::size_t text_id = corpus.add_source(text_bytes);
  const std::size_t pattern_id = corpus.add_source(pattern_bytes);
  auto text = corpus.stream(text_id);
  auto pattern = corpus.stream(pattern_id);
  return {std::move(text), std::move(pattern), std::move(corpus), text_id};
}

int run_search(const std::string& text_path, const std::string& pattern_path,
               const AlphabetSpec& spec, bool as_json, bool check) {
  LoadedInputs in = load_inputs(text_path, pattern_path, spec);
  if (in.pattern.empty()) throw UsageError("pattern is empty: " + pattern_path);

  psm::RunReport report;
  const auto t0 = Clock::now();
  report.metrics = psm::search_visit(in.text, in.pattern, [&](std::size_t pos) {
    report.positions.push_back(pos);
  });
  report.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
  report.n = in.text.size();
  report.m = in.pattern.size();
  const auto norm = psm::normalize_pattern(in.pattern);
  report.pi_p = psm::pcs(norm.pattern).size();
  report.alphabet_params = norm.partition->param_count();
  report.alphabet_constants = norm.partition->constant_count();
  report.validate();

  if (check) {
    const auto reference = psm::naive_search(in.text, in.pattern);
    if (reference != report.positions) {
      std::cerr << "check failed: engine and reference disagree\n";
      return kExitVerificationFailure;
    }
  }

  if (as_json) {
    std::cout << report.to_json() << "\n";
  } else if (in.corpus) {
    const auto& toks = in.corpus->tokens(in.text_id);
    for (std::size_t pos : report.positions)
      std::cout << pos << " " << toks[pos].line << ":" << toks[pos].column << "\n";
  } else {
    for (std::size_t pos : report.positions) std::cout << pos << "\n";
  }
  return kExitOk;
}

int run_periods(const std::string& pattern_path, const AlphabetSpec& spec,
                bool oracle) {
  const std::string pattern_bytes = read_file(pattern_path);
  std::optional<psm::PString> loaded;
  if (spec.mode == "byte") {
    loaded = psm::PString::from_bytes(pattern_bytes, psm::make_byte_partition(spec.pi_chars));
  } else {
    psm::TokenCorpus corpus;
    loaded = corpus.stream(corpus.add_source(pattern_bytes));
  }
  if (loaded->empty()) throw UsageError("pattern is empty: " + pattern_path);

  const psm::PString pattern = psm::normalize_pattern(*loaded).pattern;
  const auto result = psm::prefix_periods(pattern);
  for (const auto& e : result.table.entries())
    std::cout << e.val << " " << e.reach << "\n";

  if (oracle) {
    const auto reference = psm::prefix_periods_bruteforce(pattern);
    std::cout << "oracle:\n";
    for (const auto& e : reference) std::cout << e.p << " " << e.reach << "\n";
    const bool equal =
        reference.size() == result.table.size() &&
        std::equal(reference.begin(), reference.end(), result.table.entries().begin(),
                   [](const psm::PrefixPeriod& a, const psm::PrefixPeriodEntry& b) {
                     return a.p == b.val && a.reach == b.reach;
                   });
    std::cout << (equal ? "MATCH" : "MISMATCH") << "\n";
    if (!equal) return kExitVerificationFailure;
  }
  return kExitOk;
}

int run_verify(const psm::VerifyOptions& options) {
  const auto outcome = psm::run_verification(options, &std::cerr);
  if (!outcome.ok()) {
    std::cout << "FAIL after " << outcome.cases_run << " cases\n"
              << outcome.failure->to_string();
    return kExitVerificationFailure;
  }
  std::cout << "OK: " << outcome.cases_run << " cases\n";
  return kExitOk;
}

int run_bench(const std::string& sizes_arg, std::size_t pattern_len,
              const std::string& style, const std::string& csv_path,
              std::uint64_t seed) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(sizes_arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      sizes.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw UsageError("bad size: " + item);
    }
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) throw UsageError("cannot write csv: " + csv_path);
    out = &file;
  }
  *out << psm::kBenchCsvHeader << "\n";
  if (sizes.empty()) return kExitOk;

  psm::InstanceGen gen(seed);
  const auto alphabet = gen.partition(2, 2);
  const std::size_t max_n = *std::max_element(sizes.begin(), sizes.end());

  // One pattern and one maximal text per invocation; each row searches a
  // prefix, so rows with growing n are directly comparable.
  psm::PString pattern = style == "periodic"
                             ? gen.layered_periodic_string(alphabet, pattern_len)
                             : gen.uniform_string(alphabet, pattern_len);
  if (psm::pcs(pattern).empty()) pattern = psm::normalize_pattern(pattern).pattern;
  psm::PString text = style == "periodic" ? gen.periodic_string(alphabet, max_n, 7)
                                          : gen.uniform_string(alphabet, max_n);
  if (pattern.partition() != text.partition())
    text = psm::PString(std::vector<psm::Symbol>(text.symbols().begin(),
                                                 text.symbols().end()),
                        pattern.partition());

  for (std::size_t n : sizes) {
    const psm::PString t = text.slice(0, std::min(n, text.size()));
    const auto t0 = Clock::now();
    const auto result = psm::search(t, pattern);
    const auto wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
    *out << t.size() << "," << pattern.size() << "," << psm::pcs(pattern).size() << ","
         << result.metrics.match_calls << "," << result.metrics.loop_iterations << ","
         << result.metrics.peak_aux_words << "," << wall_ns << "\n";
  }
  if (out == &file && !file.good()) throw UsageError("error writing csv: " + csv_path);
  return kExitOk;
}

int run_tokenize(const std::string& source_path) {
  const std::string bytes = read_file(source_path);
  psm::TokenCorpus corpus;
  const std::size_t id = corpus.add_source(bytes);
  const psm::PString stream = corpus.stream(id);
  const auto& toks = corpus.tokens(id);

  nlohmann::json symbols = nlohmann::json::array();
  const auto& alphabet = *corpus.partition();
  for (psm::Symbol code = 0;
       code < alphabet.param_count() + alphabet.constant_count(); ++code) {
    symbols.push_back({{"code", code},
                       {"kind", corpus.is_identifier_code(code) ? "identifier" : "constant"},
                       {"text", corpus.spelling(code)}});
  }
  nlohmann::json tokens = nlohmann::json::array();
  for (std::size_t i = 0; i < stream.size(); ++i)
    tokens.push_back(
        {{"code", stream[i]}, {"line", toks[i].line}, {"col", toks[i].column}});

  nlohmann::json doc;
  doc["mode"] = "token";
  doc["symbols"] = std::move(symbols);
  doc["tokens"] = std::move(tokens);
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parameterized pattern matching in sublinear extra space"};
  app.require_subcommand(1);

  // search
  std::string text_path, pattern_path;
  AlphabetSpec spec;
  bool as_json = false, check = false, oracle = false;
  auto* search_cmd = app.add_subcommand("search", "find all parameterized occurrences");
  search_cmd->add_option("text", text_path, "text file")->required();
  search_cmd->add_option("pattern", pattern_path, "pattern file")->required();
  search_cmd->add_option("--pi", spec.pi_chars, "parameter characters (byte mode)");
  search_cmd->add_option("--mode", spec.mode, "byte or token")
      ->check(CLI::IsMember({"byte", "token"}));
  search_cmd->add_flag("--json", as_json, "emit a JSON run report");
  search_cmd->add_flag("--check", check)->group("");  // compare against reference

  // periods
  auto* periods_cmd = app.add_subcommand("periods", "print the pattern's prefix periods");
  periods_cmd->add_option("pattern", pattern_path, "pattern file")->required();
  periods_cmd->add_option("--pi", spec.pi_chars, "parameter characters (byte mode)");
  periods_cmd->add_option("--mode", spec.mode, "byte or token")
      ->check(CLI::IsMember({"byte", "token"}));
  periods_cmd->add_flag("--oracle", oracle, "also run the reference builder and compare");

  // verify
  psm::VerifyOptions vopt;
  vopt.cases = 10000;
  vopt.seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "randomized self-checks");
  verify_cmd->add_option("--cases", vopt.cases, "number of cases");
  verify_cmd->add_option("--seed", vopt.seed, "base seed");
  verify_cmd->add_option("--max-n", vopt.max_n, "max text length");
  verify_cmd->add_option("--max-m", vopt.max_m, "max pattern length");
  verify_cmd->add_option("--max-pi", vopt.max_pi, "max parameter alphabet size");

  // bench
  std::string sizes_arg, style = "random", csv_path;
  std::size_t bench_m = 32;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "measure work counters over input sizes");
  bench_cmd->add_option("--sizes", sizes_arg, "comma-separated text lengths");
  bench_cmd->add_option("--m", bench_m, "pattern length");
  bench_cmd->add_option("--pattern-style", style, "random or periodic")
      ->check(CLI::IsMember({"random", "periodic"}));
  bench_cmd->add_option("--csv", csv_path, "write rows to this file");
  bench_cmd->add_option("--seed", bench_seed, "generator seed");

  // tokenize
  std::string source_path;
  auto* tokenize_cmd = app.add_subcommand("tokenize", "dump a source file's token stream");
  tokenize_cmd->add_option("source", source_path, "source file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (search_cmd->parsed()) return run_search(text_path, pattern_path, spec, as_json, check);
    if (periods_cmd->parsed()) return run_periods(pattern_path, spec, oracle);
    if (verify_cmd->parsed()) return run_verify(vopt);
    if (bench_cmd->parsed())
      return run_bench(sizes_arg, bench_m, style, csv_path, bench_seed);
    if (tokenize_cmd->parsed()) return run_tokenize(source_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const psm::UnknownSymbolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
