#ifndef PSM_ALPHABET_HPP
#define PSM_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace psm {

// Symbols are plain integer codes. A partition assigns each declared code a
// role: constant (matches only itself) or parameter (renamable).
using Symbol = std::uint32_t;

enum class SymbolRole : std::uint8_t { Constant, Parameter, Unknown };

class AlphabetPartition {
 public:
  // Throws std::invalid_argument on duplicate codes or a non-disjoint split.
  AlphabetPartition(std::vector<Symbol> constants, std::vector<Symbol> parameters);

  SymbolRole role(Symbol s) const;
  bool is_constant(Symbol s) const { return role(s) == SymbolRole::Constant; }
  bool is_parameter(Symbol s) const { return role(s) == SymbolRole::Parameter; }

  // Dense index of a parameter symbol, in declaration order. Pre: is_parameter(s).
  std::size_t param_index(Symbol s) const;
  Symbol param_symbol(std::size_t index) const { return parameters_.at(index); }

  std::size_t param_count() const { return parameters_.size(); }
  std::size_t constant_count() const { return constants_.size(); }
  const std::vector<Symbol>& parameters() const { return parameters_; }
  const std::vector<Symbol>& constants() const { return constants_; }

 private:
  std::vector<Symbol> constants_;
  std::vector<Symbol> parameters_;
  // role_of_[code]: -2 unknown, -1 constant, >=0 parameter index.
  // Dense table for small codes, map fallback for sparse ones.
  std::vector<std::int32_t> dense_roles_;
  std::unordered_map<Symbol, std::int32_t> sparse_roles_;

  std::int32_t lookup(Symbol s) const;
};

using PartitionPtr = std::shared_ptr<const AlphabetPartition>;

PartitionPtr make_partition(std::vector<Symbol> constants, std::vector<Symbol> parameters);

// Byte-text partition: the given characters are parameters, every other byte
// value (0..255) is a constant.
PartitionPtr make_byte_partition(std::string_view parameter_chars);

// Printable rendering of a symbol code for diagnostics ('A', 0x1f, #1234, ...).
std::string describe_symbol(Symbol s);

}  // namespace psm

#endif
