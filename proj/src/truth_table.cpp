#include "mvlf/truth_table.hpp"

#include <limits>
#include <utility>

namespace mvlf {

std::uint64_t cell_count(value_index radix, std::uint32_t arity) {
  if (radix < 2) {
    throw invalid_radix("radix must be at least 2, got " + std::to_string(radix));
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < arity; ++i) {
    if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(radix), &count)) {
      throw resource_limit("radix " + std::to_string(radix) + " arity " + std::to_string(arity) +
                           " exceeds the addressable table size");
    }
  }
  return count;
}

table_address address_of(std::span<const value_index> tuple, value_index radix) {
  if (radix < 2) {
    throw invalid_radix("radix must be at least 2, got " + std::to_string(radix));
  }
  table_address address = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const value_index digit = tuple[i];
    if (digit >= radix) {
      throw invalid_digit("digit " + std::to_string(digit) + " at position " + std::to_string(i) +
                          " is out of range for radix " + std::to_string(radix));
    }
    if (__builtin_mul_overflow(address, static_cast<table_address>(radix), &address) ||
        __builtin_add_overflow(address, static_cast<table_address>(digit), &address)) {
      throw resource_limit("tuple address overflows 64 bits");
    }
  }
  return address;
}

arg_tuple tuple_from_address(table_address address, value_index radix, std::uint32_t arity) {
  const std::uint64_t cells = cell_count(radix, arity);
  if (address >= cells) {
    throw address_out_of_range("address " + std::to_string(address) + " is out of range for " +
                               std::to_string(cells) + " cells");
  }
  arg_tuple digits(arity, 0);
  for (std::uint32_t i = arity; i > 0; --i) {
    digits[i - 1] = static_cast<value_index>(address % radix);
    address /= radix;
  }
  return digits;
}

truth_table::truth_table(alphabet alpha, std::uint32_t arity, std::vector<value_index> values)
    : alpha_(std::move(alpha)), arity_(arity), values_(std::move(values)) {
  const std::uint64_t cells = cell_count(alpha_.radix(), arity_);
  if (values_.size() != cells) {
    throw length_mismatch("expected " + std::to_string(cells) + " values for radix " +
                          std::to_string(alpha_.radix()) + " arity " + std::to_string(arity_) +
                          ", got " + std::to_string(values_.size()));
  }
  for (value_index v : values_) {
    if (v >= alpha_.radix()) {
      throw invalid_digit("stored value-index " + std::to_string(v) +
                          " is out of range for radix " + std::to_string(alpha_.radix()));
    }
  }
}

value_index truth_table::value_at(table_address address) const {
  if (address >= values_.size()) {
    throw address_out_of_range("address " + std::to_string(address) + " is out of range for " +
                               std::to_string(values_.size()) + " cells");
  }
  return values_[address];
}

const std::string& truth_table::symbol_at(table_address address) const {
  return alpha_.symbol(value_at(address));
}

truth_table make_table(alphabet alpha, std::uint32_t arity,
                       std::span<const std::string> values) {
  const std::uint64_t cells = cell_count(alpha.radix(), arity);
  if (values.size() != cells) {
    throw length_mismatch("expected " + std::to_string(cells) + " values for radix " +
                          std::to_string(alpha.radix()) + " arity " + std::to_string(arity) +
                          ", got " + std::to_string(values.size()));
  }
  std::vector<value_index> indices;
  indices.reserve(values.size());
  for (const std::string& s : values) {
    indices.push_back(alpha.index_of(s));
  }
  return truth_table(std::move(alpha), arity, std::move(indices));
}

}  // namespace mvlf
