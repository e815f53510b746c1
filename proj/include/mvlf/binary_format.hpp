#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "mvlf/truth_table.hpp"

namespace mvlf {

/// Binary layout, little-endian:
///   magic `ATLF` (4 bytes), version 0x01 (1 byte),
///   radix u32, arity u32, symbol-block length u32,
///   symbol block (symbols NUL-terminated, UTF-8),
///   r^n payload bytes, one value-index per byte.
/// Total size = 17 + symbol-block length + r^n.
inline constexpr char binary_magic[4] = {'A', 'T', 'L', 'F'};
inline constexpr std::uint8_t binary_version = 0x01;
inline constexpr std::uint64_t binary_header_fixed_size = 17;

/// Writes the binary form; returns the byte count. Throws unsupported_radix
/// for r > 255 and io_error when the sink fails.
std::uint64_t write_binary(const truth_table& f, std::ostream& sink);

/// Reads a complete binary table. Throws format_error for a corrupt header
/// and truncated_payload when the payload is short.
truth_table read_binary(std::istream& source);

/// A table left on disk: the header is parsed once, the payload stays
/// external. evaluate seeks and reads exactly one payload byte per call
/// (stateless positioned reads, safe for concurrent readers).
class stored_table {
public:
  explicit stored_table(const std::filesystem::path& file);

  stored_table(stored_table&&) noexcept = default;
  stored_table& operator=(stored_table&&) noexcept = default;
  stored_table(const stored_table&) = delete;
  stored_table& operator=(const stored_table&) = delete;

  const alphabet& alpha() const { return header_.alpha; }
  value_index radix() const { return header_.alpha.radix(); }
  std::uint32_t arity() const { return header_.arity; }
  std::uint64_t payload_offset() const { return header_.payload_offset; }
  std::uint64_t num_cells() const { return header_.num_cells; }

  /// Address-then-lookup against the file. Throws truncated_payload when
  /// the byte at the address is missing.
  value_index evaluate(std::span<const value_index> tuple) const;
  const std::string& evaluate_symbol(std::span<const value_index> tuple) const;

private:
  struct file_handle {
    int fd = -1;
    file_handle() = default;
    explicit file_handle(int fd_in) : fd(fd_in) {}
    ~file_handle();
    file_handle(file_handle&& other) noexcept;
    file_handle& operator=(file_handle&& other) noexcept;
    file_handle(const file_handle&) = delete;
    file_handle& operator=(const file_handle&) = delete;
  };

  struct header {
    alphabet alpha;
    std::uint32_t arity;
    std::uint64_t payload_offset;
    std::uint64_t num_cells;
  };

  static header read_header(int fd, const std::filesystem::path& file);

  file_handle fd_;
  header header_;
};

}  // namespace mvlf
