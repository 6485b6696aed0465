#include "doctest.h"

#include "psm/match.hpp"
#include "psm/tokenizer.hpp"

using namespace psm;

TEST_CASE("scanner splits identifiers, literals, and punctuation") {
  auto toks = scan_tokens("while (x1 != 3.5) { s = \"a b\"; } // tail");
  REQUIRE(toks.size() == 13);
  CHECK(toks[0].text == "while");
  CHECK(toks[0].kind == TokenKind::Keyword);
  CHECK(toks[2].text == "x1");
  CHECK(toks[2].kind == TokenKind::Identifier);
  CHECK(toks[3].text == "!");
  CHECK(toks[3].kind == TokenKind::Punct);
  CHECK(toks[5].text == "3.5");
  CHECK(toks[5].kind == TokenKind::Number);
  CHECK(toks[10].text == "\"a b\"");
  CHECK(toks[10].kind == TokenKind::String);
}

TEST_CASE("scanner tracks line and column") {
  auto toks = scan_tokens("a\n  bb /* skip\nme */ c");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].line == 1);
  CHECK(toks[0].column == 1);
  CHECK(toks[1].line == 2);
  CHECK(toks[1].column == 3);
  CHECK(toks[2].line == 3);
  CHECK(toks[2].column == 7);
}

TEST_CASE("renamed variables p-match as token streams") {
  TokenCorpus corpus;
  auto a = corpus.add_source("x=y+x;");
  auto b = corpus.add_source("a=b+a;");
  CHECK(pmatch(corpus.stream(a), corpus.stream(b)).has_value());
}

TEST_CASE("inconsistent renaming does not p-match") {
  TokenCorpus corpus;
  auto a = corpus.add_source("x=y+x;");
  auto b = corpus.add_source("a=b+b;");
  CHECK_FALSE(pmatch(corpus.stream(a), corpus.stream(b)).has_value());
}

TEST_CASE("expressions without identifiers are all constants") {
  TokenCorpus corpus;
  auto id = corpus.add_source("1+2");
  auto stream = corpus.stream(id);
  CHECK(stream.size() == 3);
  CHECK(pcs(stream).empty());
  CHECK(corpus.identifier_count() == 0);
}

TEST_CASE("keywords are constants even though they look like identifiers") {
  TokenCorpus corpus;
  auto a = corpus.add_source("if(x)return y;");
  auto stream = corpus.stream(a);
  const auto& alphabet = *corpus.partition();
  CHECK(corpus.identifier_count() == 2);
  CHECK(alphabet.is_constant(stream[0]));   // if
  CHECK(alphabet.is_parameter(stream[2]));  // x
  CHECK(alphabet.is_constant(stream[4]));   // return
}

TEST_CASE("tokenization is deterministic") {
  const char* src = "int f(int n){return n<2?n:f(n-1)+f(n-2);}";
  TokenCorpus c1, c2;
  auto s1 = c1.stream(c1.add_source(src));
  auto s2 = c2.stream(c2.add_source(src));
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == s2[i]);
}

TEST_CASE("binary bytes pass through as constants") {
  TokenCorpus corpus;
  auto id = corpus.add_source(std::string_view("\x01\x02x\x01", 4));
  auto stream = corpus.stream(id);
  REQUIRE(stream.size() == 4);
  const auto& alphabet = *corpus.partition();
  CHECK(alphabet.is_constant(stream[0]));
  CHECK(alphabet.is_parameter(stream[2]));
  CHECK(stream[0] == stream[3]);  // same byte, same code
}

TEST_CASE("a shared corpus interns identifiers across sources") {
  TokenCorpus corpus;
  auto a = corpus.add_source("alpha beta");
  auto b = corpus.add_source("beta gamma");
  auto sa = corpus.stream(a);
  auto sb = corpus.stream(b);
  CHECK(corpus.identifier_count() == 3);
  CHECK(sa[1] == sb[0]);  // "beta" has one code
  CHECK(corpus.spelling(sa[0]) == "alpha");
  CHECK(corpus.is_identifier_code(sa[0]));
}
