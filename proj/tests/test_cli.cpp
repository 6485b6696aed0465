#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PSMATCH_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/psmatch_test_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
  return path;
}

}  // namespace

TEST_CASE("cli search prints one position per line") {
  auto text = write_temp("t1", "ABABBABAABABBABAABBA");
  auto pattern = write_temp("p1", "ABAB");
  auto r = run_cli("search " + text + " " + pattern + " --pi AB");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n4\n8\n12\n");
}

TEST_CASE("cli search emits the json report") {
  auto text = write_temp("t2", "ABABBABAABABBABAABBA");
  auto pattern = write_temp("p2", "ABAB");
  auto r = run_cli("search " + text + " " + pattern + " --pi AB --json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("positions").get<std::vector<std::size_t>>() ==
        std::vector<std::size_t>{0, 4, 8, 12});
  CHECK(j.at("n") == 20);
  CHECK(j.at("m") == 4);
  CHECK(j.at("pi_p") == 2);
  CHECK(j.at("metrics").contains("peak_aux_words"));
}

TEST_CASE("cli search with zero matches still succeeds") {
  auto text = write_temp("t3", "aaaa");
  auto pattern = write_temp("p3", "ab");
  auto r = run_cli("search " + text + " " + pattern);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
}

TEST_CASE("cli search pattern longer than text") {
  auto text = write_temp("t4", "ab");
  auto pattern = write_temp("p4", "abab");
  auto r = run_cli("search " + text + " " + pattern);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
}

TEST_CASE("cli search hidden check flag compares against the reference") {
  auto text = write_temp("t5", "BCACBA");
  auto pattern = write_temp("p5", "AB");
  auto r = run_cli("search " + text + " " + pattern + " --pi ABC --check");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n1\n2\n3\n4\n");
}

TEST_CASE("cli usage errors exit with 2") {
  auto pattern = write_temp("p6", "ABAB");
  CHECK(run_cli("search /nonexistent/file " + pattern).exit_code == 2);
  auto empty = write_temp("e6", "");
  auto text = write_temp("t6", "ABAB");
  auto r = run_cli("search " + text + " " + empty);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("empty") != std::string::npos);
  CHECK(run_cli("search").exit_code == 2);
  CHECK(run_cli("bench --sizes 10 --csv /no/such/dir/out.csv").exit_code == 2);
}

TEST_CASE("cli periods prints the table and the oracle verdict") {
  auto pattern = write_temp("p7", "ABABBABAABABBABAABBA");
  auto r = run_cli("periods " + pattern + " --pi AB --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 4\n4 18\noracle:\n1 4\n4 18\nMATCH\n");
}

TEST_CASE("cli periods on a short pattern prints an empty table") {
  auto pattern = write_temp("p8", "ABA");
  auto r = run_cli("periods " + pattern + " --pi AB --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "oracle:\nMATCH\n");
}

TEST_CASE("cli verify runs and reports the case count") {
  auto r = run_cli("verify --cases 64 --seed 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("OK: 64 cases") != std::string::npos);
  auto zero = run_cli("verify --cases 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("OK: 0 cases") != std::string::npos);
}

TEST_CASE("cli bench emits the documented csv") {
  auto r = run_cli("bench --sizes 256,512 --m 16 --seed 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("n,m,pi_p,match_calls,loop_iterations,peak_aux_words,wall_ns\n",
                       0) == 0);
  int data_lines = 0;
  for (char c : r.output)
    if (c == '\n') ++data_lines;
  CHECK(data_lines == 3);  // header + two rows

  auto empty = run_cli("bench --sizes \"\"");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output == "n,m,pi_p,match_calls,loop_iterations,peak_aux_words,wall_ns\n");
}

TEST_CASE("cli token mode matches renamed programs") {
  auto text = write_temp("t9", "int a = b + a; int x = y + x;");
  auto pattern = write_temp("p9", "p = q + p;");
  auto r = run_cli("search " + text + " " + pattern + " --mode token");
  CHECK(r.exit_code == 0);
  // token stream: [int a = b + a ; int x = y + x ;] -> matches at 1 and 8
  CHECK(r.output == "1 1:5\n8 1:20\n");
}

TEST_CASE("cli tokenize dumps a symbol map") {
  auto src = write_temp("t10", "x = y + x;");
  auto r = run_cli("tokenize " + src);
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("mode") == "token");
  CHECK(j.at("symbols").size() == 5);  // x, y, =, +, ;
  CHECK(j.at("tokens").size() == 6);
  CHECK(j.at("symbols")[0].at("kind") == "identifier");
}
