#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvlf/errors.hpp"

namespace mvlf {

/// Index of a value inside an alphabet, in [0, r).
using value_index = std::uint32_t;

/// Numeric address of an argument tuple, in [0, r^n).
using table_address = std::uint64_t;

/// The ordered value set of an r-valued logic: r >= 2 pairwise distinct
/// symbol tokens, each a nonempty string without whitespace. Position in
/// the list is the symbol's value-index.
class alphabet {
public:
  explicit alphabet(std::vector<std::string> symbols);

  value_index radix() const { return static_cast<value_index>(symbols_.size()); }

  /// Symbol for a value-index; throws invalid_digit when index >= r.
  const std::string& symbol(value_index index) const;

  /// Value-index of a symbol; throws unknown_symbol.
  value_index index_of(std::string_view symbol) const;

  bool contains(std::string_view symbol) const;

  const std::vector<std::string>& symbols() const { return symbols_; }

  friend bool operator==(const alphabet& a, const alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

private:
  struct sv_hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, value_index, sv_hash, std::equal_to<>> index_;
};

}  // namespace mvlf
