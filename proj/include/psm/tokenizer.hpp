#ifndef PSM_TOKENIZER_HPP
#define PSM_TOKENIZER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psm/pstring.hpp"

namespace psm {

// Demonstration lexer for source-like text. Identifiers become parameter
// symbols (one code per distinct spelling); keywords, literals, punctuation,
// and stray bytes become constants. Whitespace and C-style comments are
// dropped. Not a language-accurate lexer on purpose.

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  Number,
  String,
  Character,
  Punct,
  Byte,
};

struct SourceToken {
  std::string text;
  TokenKind kind;
  std::uint32_t line;    // 1-based
  std::uint32_t column;  // 1-based, in bytes
};

const char* token_kind_name(TokenKind kind);

// Maximal-munch scan: identifiers are [A-Za-z_][A-Za-z0-9_]*, numbers are
// digits with an optional fractional part, string/char literals honor
// backslash escapes, everything else is a single byte.
std::vector<SourceToken> scan_tokens(std::string_view source);

// Interns token spellings from one or more sources into a shared alphabet:
// parameter codes 0..P-1 for identifiers in order of first appearance,
// constant codes P.. for everything else. Intern all sources before calling
// stream()/partition().
class TokenCorpus {
 public:
  std::size_t add_source(std::string_view source);

  const PartitionPtr& partition() const;
  PString stream(std::size_t source_id) const;
  const std::vector<SourceToken>& tokens(std::size_t source_id) const;

  std::size_t identifier_count() const;
  // Spelling for a symbol code, and whether the code is an identifier.
  const std::string& spelling(Symbol code) const;
  bool is_identifier_code(Symbol code) const;

 private:
  void invalidate();
  void build() const;

  std::vector<std::vector<SourceToken>> sources_;
  mutable PartitionPtr partition_;
  mutable std::vector<std::string> identifier_texts_;
  mutable std::vector<std::string> constant_texts_;
  mutable std::vector<std::vector<Symbol>> streams_;
};

}  // namespace psm

#endif
