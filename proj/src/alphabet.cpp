#include "psm/alphabet.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace psm {

namespace {
constexpr std::int32_t kUnknown = -2;
constexpr std::int32_t kConstant = -1;
constexpr Symbol kDenseLimit = 1u << 16;
}  // namespace

AlphabetPartition::AlphabetPartition(std::vector<Symbol> constants,
                                     std::vector<Symbol> parameters)
    : constants_(std::move(constants)), parameters_(std::move(parameters)) {
  Symbol max_dense = 0;
  bool any = false;
  for (Symbol s : constants_)
    if (s < kDenseLimit) max_dense = std::max(max_dense, s), any = true;
  for (Symbol s : parameters_)
    if (s < kDenseLimit) max_dense = std::max(max_dense, s), any = true;
  if (any) dense_roles_.assign(static_cast<std::size_t>(max_dense) + 1, kUnknown);

  auto place = [&](Symbol s, std::int32_t value) {
    if (s < dense_roles_.size()) {
      if (dense_roles_[s] != kUnknown)
        throw std::invalid_argument("alphabet partition: symbol declared twice: " +
                                    describe_symbol(s));
      dense_roles_[s] = value;
    } else {
      if (!sparse_roles_.emplace(s, value).second)
        throw std::invalid_argument("alphabet partition: symbol declared twice: " +
                                    describe_symbol(s));
    }
  };

  for (Symbol s : constants_) place(s, kConstant);
  for (std::size_t i = 0; i < parameters_.size(); ++i)
    place(parameters_[i], static_cast<std::int32_t>(i));
}

std::int32_t AlphabetPartition::lookup(Symbol s) const {
  if (s < dense_roles_.size()) return dense_roles_[s];
  auto it = sparse_roles_.find(s);
  return it == sparse_roles_.end() ? kUnknown : it->second;
}

SymbolRole AlphabetPartition::role(Symbol s) const {
  const std::int32_t v = lookup(s);
  if (v == kUnknown) return SymbolRole::Unknown;
  return v == kConstant ? SymbolRole::Constant : SymbolRole::Parameter;
}

std::size_t AlphabetPartition::param_index(Symbol s) const {
  const std::int32_t v = lookup(s);
  if (v < 0)
    throw std::invalid_argument("param_index: not a parameter symbol: " +
                                describe_symbol(s));
  return static_cast<std::size_t>(v);
}

PartitionPtr make_partition(std::vector<Symbol> constants,
                            std::vector<Symbol> parameters) {
  return std::make_shared<const AlphabetPartition>(std::move(constants),
                                                   std::move(parameters));
}

PartitionPtr make_byte_partition(std::string_view parameter_chars) {
  std::vector<bool> is_param(256, false);
  std::vector<Symbol> params;
  for (unsigned char c : parameter_chars) {
    if (!is_param[c]) {
      is_param[c] = true;
      params.push_back(c);
    }
  }
  std::vector<Symbol> constants;
  constants.reserve(256 - params.size());
  for (Symbol s = 0; s < 256; ++s)
    if (!is_param[s]) constants.push_back(s);
  return make_partition(std::move(constants), std::move(params));
}

std::string describe_symbol(Symbol s) {
  if (s >= 0x20 && s < 0x7f) return std::string(1, static_cast<char>(s));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%u", s);
  return buf;
}

}  // namespace psm
