#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvlf {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Alphabet construction failed (fewer than two symbols, duplicates,
/// empty or whitespace-containing tokens).
class invalid_alphabet : public error {
public:
  using error::error;
};

/// A radix outside the supported domain (r < 2) was supplied.
class invalid_radix : public error {
public:
  using error::error;
};

/// A tuple digit or stored value-index is >= the radix.
class invalid_digit : public error {
public:
  using error::error;
};

/// An address >= r^n was supplied where a table index was expected.
class address_out_of_range : public error {
public:
  using error::error;
};

/// A value list does not have exactly r^n entries.
class length_mismatch : public error {
public:
  using error::error;
};

/// A symbol token does not belong to the alphabet.
class unknown_symbol : public error {
public:
  using error::error;
};

/// A tuple length does not match the arity of the function it feeds.
class arity_mismatch : public error {
public:
  using error::error;
};

/// A set of tables does not form a valid composition or solver instance
/// (arity mismatch between tables, mixed alphabets, empty argument list).
class composition_spec_error : public error {
public:
  using error::error;
};

/// An operation would exceed a size limit (cell budget, address overflow).
class resource_limit : public error {
public:
  using error::error;
};

/// No transforming function exists: two argument addresses produce the same
/// inner tuple but demand different result values.
class inconsistent_error : public error {
public:
  inconsistent_error(std::uint64_t first, std::uint64_t second, const std::string& what)
      : error(what), first_(first), second_(second) {}

  /// Argument address that first bound the conflicting cell.
  std::uint64_t first_address() const { return first_; }
  /// Argument address whose requirement contradicts it.
  std::uint64_t second_address() const { return second_; }

private:
  std::uint64_t first_;
  std::uint64_t second_;
};

/// A text document is malformed; carries the 1-based line number.
class parse_error : public error {
public:
  parse_error(std::size_t line, const std::string& reason)
      : error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// The binary format stores one value per byte and cannot hold r > 255.
class unsupported_radix : public error {
public:
  using error::error;
};

/// An underlying read or write failed.
class io_error : public error {
public:
  using error::error;
};

/// A byte stream is not a valid binary table (bad magic, version, header).
class format_error : public error {
public:
  using error::error;
};

/// The payload of a stored table is shorter than its header promises.
class truncated_payload : public error {
public:
  using error::error;
};

}  // namespace mvlf
