#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvlf/alphabet.hpp"
#include "mvlf/errors.hpp"

namespace mvlf {

/// An argument tuple: n value-indices, first variable most significant
/// in the standard address order.
using arg_tuple = std::vector<value_index>;

/// r^n, the number of cells of an n-ary table over radix r.
/// Throws invalid_radix for r < 2 and resource_limit on 64-bit overflow.
std::uint64_t cell_count(value_index radix, std::uint32_t arity);

/// Mixed-radix address of a tuple: sum of digit_i * r^(n-1-i), the first
/// digit most significant. Bijective from the r^n tuples onto [0, r^n).
table_address address_of(std::span<const value_index> tuple, value_index radix);

/// Inverse of address_of. Throws address_out_of_range for k >= r^n.
arg_tuple tuple_from_address(table_address address, value_index radix, std::uint32_t arity);

/// An r-valued logic function of n variables as a dense value vector of
/// length r^n, position k holding the value for the tuple with address k.
/// Immutable after construction.
class truth_table {
public:
  truth_table(alphabet alpha, std::uint32_t arity, std::vector<value_index> values);

  const alphabet& alpha() const { return alpha_; }
  std::uint32_t arity() const { return arity_; }
  value_index radix() const { return alpha_.radix(); }
  std::uint64_t num_cells() const { return values_.size(); }

  /// Value-index stored at an address; throws address_out_of_range.
  value_index value_at(table_address address) const;

  /// Symbol stored at an address.
  const std::string& symbol_at(table_address address) const;

  std::span<const value_index> values() const { return values_; }

  friend bool operator==(const truth_table& a, const truth_table& b) {
    return a.alpha_ == b.alpha_ && a.arity_ == b.arity_ && a.values_ == b.values_;
  }

private:
  alphabet alpha_;
  std::uint32_t arity_;
  std::vector<value_index> values_;
};

/// Builds a table from symbol tokens in ascending address order.
/// Throws length_mismatch when values.size() != r^n and unknown_symbol for
/// tokens outside the alphabet.
truth_table make_table(alphabet alpha, std::uint32_t arity,
                       std::span<const std::string> values);

}  // namespace mvlf
