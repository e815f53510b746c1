#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "mvlf/alphabet.hpp"
#include "mvlf/errors.hpp"

namespace mvlf {

/// Exact nonnegative integer for solution and function counts. Quantities
/// like r^(r^n) and r^free_count overflow any fixed width, so this wraps an
/// arbitrary-precision value. No floating point is involved anywhere.
class solution_count {
public:
  solution_count() : value_(0) {}
  explicit solution_count(unsigned long value) : value_(value) {}

  /// base^exponent, exact.
  static solution_count power(value_index base, std::uint64_t exponent);

  solution_count& operator*=(const solution_count& other) {
    value_ *= other.value_;
    return *this;
  }

  friend solution_count operator*(solution_count a, const solution_count& b) {
    a *= b;
    return a;
  }

  bool is_zero() const { return value_ == 0; }

  /// Decimal rendering.
  std::string str() const { return value_.get_str(); }

  /// True when the count fits std::uint64_t.
  bool fits_u64() const;
  std::uint64_t as_u64() const;

  friend bool operator==(const solution_count& a, const solution_count& b) {
    return a.value_ == b.value_;
  }
  friend bool operator==(const solution_count& a, unsigned long b) {
    return a.value_ == b;
  }
  friend bool operator<(const solution_count& a, const solution_count& b) {
    return a.value_ < b.value_;
  }

  const mpz_class& value() const { return value_; }

private:
  explicit solution_count(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

/// Number of distinct r-valued logic functions of n variables: exactly
/// r^(r^n). Throws invalid_radix for r < 2.
solution_count count_functions(value_index radix, std::uint32_t arity);

}  // namespace mvlf
