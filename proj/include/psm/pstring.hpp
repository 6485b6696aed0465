#ifndef PSM_PSTRING_HPP
#define PSM_PSTRING_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psm/alphabet.hpp"

namespace psm {

// Raised when a string contains a code the partition does not declare.
class UnknownSymbolError : public std::runtime_error {
 public:
  UnknownSymbolError(Symbol symbol, std::size_t offset);
  Symbol symbol() const { return symbol_; }
  std::size_t offset() const { return offset_; }

 private:
  Symbol symbol_;
  std::size_t offset_;
};

// A string over a partitioned alphabet. Immutable after construction; every
// symbol is validated against the partition up front so downstream code can
// classify without error paths. Indexing is 0-based and slice(i, j) excludes
// position j.
class PString {
 public:
  PString(std::vector<Symbol> symbols, PartitionPtr partition);

  // Bytes become symbol codes 0..255.
  static PString from_bytes(std::string_view text, PartitionPtr partition);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  const PartitionPtr& partition() const { return partition_; }
  const AlphabetPartition& alphabet() const { return *partition_; }

  PString slice(std::size_t i, std::size_t j) const;

  // Same partition object and same symbol sequence.
  bool operator==(const PString& other) const {
    return partition_ == other.partition_ && symbols_ == other.symbols_;
  }

  // Printable form for diagnostics; lossless only for byte-sized codes.
  std::string display() const;

 private:
  std::vector<Symbol> symbols_;
  PartitionPtr partition_;
};

}  // namespace psm

#endif
