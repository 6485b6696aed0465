#include "psm/pstring.hpp"

namespace psm {

namespace {
std::string unknown_message(Symbol symbol, std::size_t offset) {
  return "undeclared symbol " + describe_symbol(symbol) + " at offset " +
         std::to_string(offset);
}
}  // namespace

UnknownSymbolError::UnknownSymbolError(Symbol symbol, std::size_t offset)
    : std::runtime_error(unknown_message(symbol, offset)),
      symbol_(symbol),
      offset_(offset) {}

PString::PString(std::vector<Symbol> symbols, PartitionPtr partition)
    : symbols_(std::move(symbols)), partition_(std::move(partition)) {
  if (!partition_) throw std::invalid_argument("PString: null partition");
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (partition_->role(symbols_[i]) == SymbolRole::Unknown)
      throw UnknownSymbolError(symbols_[i], i);
}

PString PString::from_bytes(std::string_view text, PartitionPtr partition) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (unsigned char c : text) symbols.push_back(c);
  return PString(std::move(symbols), std::move(partition));
}

PString PString::slice(std::size_t i, std::size_t j) const {
  if (i > j || j > symbols_.size())
    throw std::out_of_range("PString::slice: bad range");
  return PString(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(i),
                                     symbols_.begin() + static_cast<std::ptrdiff_t>(j)),
                 partition_);
}

std::string PString::display() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out += describe_symbol(s);
  return out;
}

}  // namespace psm
