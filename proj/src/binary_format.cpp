#include "mvlf/binary_format.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

namespace mvlf {

namespace {

void put_u32_le(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::uint32_t get_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

// Splits a NUL-terminated symbol block and validates it as an alphabet.
alphabet parse_symbol_block(const std::string& block, std::uint32_t radix) {
  std::vector<std::string> symbols;
  std::size_t start = 0;
  while (start < block.size()) {
    const std::size_t nul = block.find('\0', start);
    if (nul == std::string::npos) {
      throw format_error("symbol block is not NUL-terminated");
    }
    symbols.emplace_back(block, start, nul - start);
    start = nul + 1;
  }
  if (symbols.size() != radix) {
    throw format_error("symbol block holds " + std::to_string(symbols.size()) +
                       " symbols, header says " + std::to_string(radix));
  }
  try {
    return alphabet(std::move(symbols));
  } catch (const invalid_alphabet& e) {
    throw format_error(std::string("invalid symbol block: ") + e.what());
  }
}

std::string header_bytes(const truth_table& f, std::uint64_t& total_size) {
  std::string block;
  for (const std::string& s : f.alpha().symbols()) {
    block += s;
    block += '\0';
  }
  if (block.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw format_error("symbol block exceeds the 32-bit length field");
  }

  std::string header;
  header.append(binary_magic, sizeof(binary_magic));
  header.push_back(static_cast<char>(binary_version));
  put_u32_le(header, f.radix());
  put_u32_le(header, f.arity());
  put_u32_le(header, static_cast<std::uint32_t>(block.size()));
  header += block;
  total_size = header.size() + f.num_cells();
  return header;
}

}  // namespace

std::uint64_t write_binary(const truth_table& f, std::ostream& sink) {
  if (f.radix() > 255) {
    throw unsupported_radix("the binary format stores one value per byte; radix " +
                            std::to_string(f.radix()) + " > 255");
  }
  std::uint64_t total = 0;
  const std::string header = header_bytes(f, total);
  sink.write(header.data(), static_cast<std::streamsize>(header.size()));

  std::string payload;
  payload.reserve(f.num_cells());
  for (value_index v : f.values()) {
    payload.push_back(static_cast<char>(v));
  }
  sink.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!sink.good()) {
    throw io_error("failed to write the binary table");
  }
  return total;
}

truth_table read_binary(std::istream& source) {
  std::array<char, binary_header_fixed_size> fixed{};
  source.read(fixed.data(), fixed.size());
  if (source.gcount() != static_cast<std::streamsize>(fixed.size())) {
    throw format_error("stream is shorter than the fixed header");
  }
  if (std::memcmp(fixed.data(), binary_magic, sizeof(binary_magic)) != 0) {
    throw format_error("bad magic, not a binary table");
  }
  if (static_cast<std::uint8_t>(fixed[4]) != binary_version) {
    throw format_error("unsupported binary version " +
                       std::to_string(static_cast<unsigned>(static_cast<std::uint8_t>(fixed[4]))));
  }
  const unsigned char* p = reinterpret_cast<const unsigned char*>(fixed.data());
  const std::uint32_t radix = get_u32_le(p + 5);
  const std::uint32_t arity = get_u32_le(p + 9);
  const std::uint32_t block_len = get_u32_le(p + 13);
  if (radix < 2 || radix > 255) {
    throw format_error("header radix " + std::to_string(radix) + " is out of range");
  }

  std::string block(block_len, '\0');
  source.read(block.data(), block_len);
  if (source.gcount() != static_cast<std::streamsize>(block_len)) {
    throw format_error("stream is shorter than the symbol block");
  }
  alphabet alpha = parse_symbol_block(block, radix);

  const std::uint64_t cells = cell_count(radix, arity);
  std::string payload(cells, '\0');
  source.read(payload.data(), static_cast<std::streamsize>(cells));
  if (source.gcount() != static_cast<std::streamsize>(cells)) {
    throw truncated_payload("payload holds " + std::to_string(source.gcount()) +
                            " of " + std::to_string(cells) + " values");
  }

  std::vector<value_index> values;
  values.reserve(cells);
  for (char c : payload) {
    const auto v = static_cast<value_index>(static_cast<unsigned char>(c));
    if (v >= radix) {
      throw format_error("payload value " + std::to_string(v) + " is out of range for radix " +
                         std::to_string(radix));
    }
    values.push_back(v);
  }
  return truth_table(std::move(alpha), arity, std::move(values));
}

stored_table::file_handle::~file_handle() {
  if (fd >= 0) ::close(fd);
}

stored_table::file_handle::file_handle(file_handle&& other) noexcept
    : fd(std::exchange(other.fd, -1)) {}

stored_table::file_handle& stored_table::file_handle::operator=(file_handle&& other) noexcept {
  if (this != &other) {
    if (fd >= 0) ::close(fd);
    fd = std::exchange(other.fd, -1);
  }
  return *this;
}

namespace {

int open_readonly(const std::filesystem::path& file) {
  const int fd = ::open(file.c_str(), O_RDONLY);
  if (fd < 0) {
    throw io_error("cannot open '" + file.string() + "': " + std::strerror(errno));
  }
  return fd;
}

}  // namespace

stored_table::stored_table(const std::filesystem::path& file)
    : fd_(open_readonly(file)), header_(read_header(fd_.fd, file)) {}

stored_table::header stored_table::read_header(int fd, const std::filesystem::path& file) {
  std::array<char, binary_header_fixed_size> fixed{};
  ssize_t got = ::pread(fd, fixed.data(), fixed.size(), 0);
  if (got < 0) throw io_error("cannot read '" + file.string() + "': " + std::strerror(errno));
  if (got != static_cast<ssize_t>(fixed.size())) {
    throw format_error("file is shorter than the fixed header");
  }
  if (std::memcmp(fixed.data(), binary_magic, sizeof(binary_magic)) != 0) {
    throw format_error("bad magic, not a binary table");
  }
  if (static_cast<std::uint8_t>(fixed[4]) != binary_version) {
    throw format_error("unsupported binary version");
  }
  const unsigned char* p = reinterpret_cast<const unsigned char*>(fixed.data());
  const std::uint32_t radix = get_u32_le(p + 5);
  const std::uint32_t arity = get_u32_le(p + 9);
  const std::uint32_t block_len = get_u32_le(p + 13);
  if (radix < 2 || radix > 255) {
    throw format_error("header radix " + std::to_string(radix) + " is out of range");
  }

  std::string block(block_len, '\0');
  got = ::pread(fd, block.data(), block_len, static_cast<off_t>(fixed.size()));
  if (got < 0) throw io_error("cannot read '" + file.string() + "': " + std::strerror(errno));
  if (got != static_cast<ssize_t>(block_len)) {
    throw format_error("file is shorter than the symbol block");
  }

  return header{parse_symbol_block(block, radix), arity,
                binary_header_fixed_size + block_len, cell_count(radix, arity)};
}

value_index stored_table::evaluate(std::span<const value_index> tuple) const {
  if (tuple.size() != header_.arity) {
    throw arity_mismatch("tuple of length " + std::to_string(tuple.size()) +
                         " fed to a stored function of arity " + std::to_string(header_.arity));
  }
  const table_address address = address_of(tuple, radix());

  unsigned char byte = 0;
  const ssize_t got = ::pread(fd_.fd, &byte, 1, static_cast<off_t>(header_.payload_offset + address));
  if (got < 0) throw io_error(std::string("positioned read failed: ") + std::strerror(errno));
  if (got == 0) {
    throw truncated_payload("no payload byte at address " + std::to_string(address));
  }
  const auto v = static_cast<value_index>(byte);
  if (v >= radix()) {
    throw format_error("payload value " + std::to_string(v) + " is out of range for radix " +
                       std::to_string(radix()));
  }
  return v;
}

const std::string& stored_table::evaluate_symbol(std::span<const value_index> tuple) const {
  return header_.alpha.symbol(evaluate(tuple));
}

}  // namespace mvlf
