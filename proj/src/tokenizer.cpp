#include "psm/tokenizer.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace psm {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_body(unsigned char c) { return std::isalnum(c) || c == '_'; }

const std::unordered_set<std::string_view>& keyword_set() {
  static const std::unordered_set<std::string_view> kw = {
      "auto",     "bool",    "break",   "case",    "char",     "class",
      "const",    "continue", "default", "delete",  "do",       "double",
      "else",     "enum",    "extern",  "false",   "float",    "for",
      "goto",     "if",      "int",     "long",    "namespace", "new",
      "nullptr",  "return",  "short",   "signed",  "sizeof",   "static",
      "struct",   "switch",  "template", "this",   "true",     "typedef",
      "union",    "unsigned", "using",  "void",    "volatile", "while",
  };
  return kw;
}

}  // namespace

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Character: return "char";
    case TokenKind::Punct: return "punct";
    case TokenKind::Byte: return "byte";
  }
  return "?";
}

std::vector<SourceToken> scan_tokens(std::string_view source) {
  std::vector<SourceToken> out;
  std::uint32_t line = 1, column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) {
      if (source[i + t] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += count;
  };

  while (i < source.size()) {
    const unsigned char c = static_cast<unsigned char>(source[i]);
    const std::uint32_t tok_line = line, tok_col = column;

    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    // comments
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      std::size_t end = i;
      while (end < source.size() && source[end] != '\n') ++end;
      advance(end - i);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
      std::size_t end = i + 2;
      while (end + 1 < source.size() && !(source[end] == '*' && source[end + 1] == '/'))
        ++end;
      advance(std::min(end + 2, source.size()) - i);
      continue;
    }
    if (ident_start(c)) {
      std::size_t end = i + 1;
      while (end < source.size() && ident_body(static_cast<unsigned char>(source[end])))
        ++end;
      std::string text(source.substr(i, end - i));
      const TokenKind kind =
          keyword_set().count(text) ? TokenKind::Keyword : TokenKind::Identifier;
      out.push_back({std::move(text), kind, tok_line, tok_col});
      advance(end - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t end = i + 1;
      while (end < source.size() && std::isdigit(static_cast<unsigned char>(source[end])))
        ++end;
      if (end < source.size() && source[end] == '.' && end + 1 < source.size() &&
          std::isdigit(static_cast<unsigned char>(source[end + 1]))) {
        ++end;
        while (end < source.size() &&
               std::isdigit(static_cast<unsigned char>(source[end])))
          ++end;
      }
      out.push_back({std::string(source.substr(i, end - i)), TokenKind::Number,
                     tok_line, tok_col});
      advance(end - i);
      continue;
    }
    if (c == '"' || c == '\'') {
      const char quote = static_cast<char>(c);
      std::size_t end = i + 1;
      while (end < source.size() && source[end] != quote) {
        end += (source[end] == '\\' && end + 1 < source.size()) ? 2 : 1;
      }
      if (end < source.size()) ++end;  // closing quote; unterminated runs to EOF
      out.push_back({std::string(source.substr(i, end - i)),
                     quote == '"' ? TokenKind::String : TokenKind::Character,
                     tok_line, tok_col});
      advance(end - i);
      continue;
    }
    if (c >= 0x21 && c < 0x7f) {
      out.push_back({std::string(1, static_cast<char>(c)), TokenKind::Punct,
                     tok_line, tok_col});
      advance(1);
      continue;
    }
    // anything else (non-ASCII, control bytes) passes through one byte at a time
    out.push_back({std::string(1, static_cast<char>(c)), TokenKind::Byte,
                   tok_line, tok_col});
    advance(1);
  }
  return out;
}

std::size_t TokenCorpus::add_source(std::string_view source) {
  invalidate();
  sources_.push_back(scan_tokens(source));
  return sources_.size() - 1;
}

void TokenCorpus::invalidate() {
  partition_.reset();
  identifier_texts_.clear();
  constant_texts_.clear();
  streams_.clear();
}

void TokenCorpus::build() const {
  if (partition_) return;

  std::unordered_map<std::string, Symbol> ident_codes;
  // Constants are keyed by kind+spelling so the string literal "if" cannot
  // collide with the keyword if.
  std::unordered_map<std::string, Symbol> const_codes;

  std::vector<std::vector<int>> roles(sources_.size());
  std::vector<std::vector<Symbol>> raw(sources_.size());

  for (std::size_t s = 0; s < sources_.size(); ++s) {
    raw[s].reserve(sources_[s].size());
    for (const SourceToken& tok : sources_[s]) {
      if (tok.kind == TokenKind::Identifier) {
        auto [it, fresh] =
            ident_codes.emplace(tok.text, static_cast<Symbol>(ident_codes.size()));
        if (fresh) identifier_texts_.push_back(tok.text);
        raw[s].push_back(it->second);
        roles[s].push_back(1);
      } else {
        std::string key = std::string(token_kind_name(tok.kind)) + ":" + tok.text;
        auto [it, fresh] =
            const_codes.emplace(std::move(key), static_cast<Symbol>(const_codes.size()));
        if (fresh) constant_texts_.push_back(tok.text);
        raw[s].push_back(it->second);
        roles[s].push_back(0);
      }
    }
  }

  const Symbol constant_base = static_cast<Symbol>(ident_codes.size());
  std::vector<Symbol> parameters(ident_codes.size());
  for (Symbol i = 0; i < parameters.size(); ++i) parameters[i] = i;
  std::vector<Symbol> constants(const_codes.size());
  for (Symbol i = 0; i < constants.size(); ++i) constants[i] = constant_base + i;
  partition_ = make_partition(std::move(constants), std::move(parameters));

  streams_.resize(sources_.size());
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    streams_[s].reserve(raw[s].size());
    for (std::size_t t = 0; t < raw[s].size(); ++t)
      streams_[s].push_back(roles[s][t] ? raw[s][t] : constant_base + raw[s][t]);
  }
}

const PartitionPtr& TokenCorpus::partition() const {
  build();
  return partition_;
}

PString TokenCorpus::stream(std::size_t source_id) const {
  build();
  return PString(std::vector<Symbol>(streams_.at(source_id)), partition_);
}

const std::vector<SourceToken>& TokenCorpus::tokens(std::size_t source_id) const {
  return sources_.at(source_id);
}

std::size_t TokenCorpus::identifier_count() const {
  build();
  return identifier_texts_.size();
}

const std::string& TokenCorpus::spelling(Symbol code) const {
  build();
  if (code < identifier_texts_.size()) return identifier_texts_[code];
  const std::size_t idx = code - identifier_texts_.size();
  if (idx < constant_texts_.size()) return constant_texts_[idx];
  throw std::out_of_range("TokenCorpus::spelling: unknown code");
}

bool TokenCorpus::is_identifier_code(Symbol code) const {
  build();
  return code < identifier_texts_.size();
}

}  // namespace psm
