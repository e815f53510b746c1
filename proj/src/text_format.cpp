#include "mvlf/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mvlf {

namespace {

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

// Lines split on LF; a trailing CR is dropped so CRLF documents parse too.
std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    std::string_view line = s.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

template <typename T>
bool parse_uint(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::string emit_text(const truth_table& f) {
  std::ostringstream out;
  out << "mvlf 1\n";
  out << "radix " << f.radix() << " arity " << f.arity() << "\n";
  const std::vector<std::string>& symbols = f.alpha().symbols();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out << ' ';
    out << symbols[i];
  }
  out << '\n';
  for (std::uint64_t a = 0; a < f.num_cells(); ++a) {
    if (a) out << ' ';
    out << f.alpha().symbol(f.values()[a]);
  }
  out << '\n';
  return std::move(out).str();
}

truth_table parse_text(std::string_view document) {
  const std::vector<std::string_view> lines = split_lines(document);

  if (lines.empty()) throw parse_error(1, "empty document");
  const std::vector<std::string_view> header = split_tokens(lines[0]);
  if (header.size() != 2 || header[0] != "mvlf") {
    throw parse_error(1, "expected header 'mvlf 1'");
  }
  if (header[1] != "1") {
    throw parse_error(1, "unsupported format version '" + std::string(header[1]) + "'");
  }

  if (lines.size() < 2) throw parse_error(2, "missing 'radix <r> arity <n>' line");
  const std::vector<std::string_view> shape = split_tokens(lines[1]);
  value_index radix = 0;
  std::uint32_t arity = 0;
  if (shape.size() != 4 || shape[0] != "radix" || shape[2] != "arity" ||
      !parse_uint(shape[1], radix) || !parse_uint(shape[3], arity)) {
    throw parse_error(2, "expected 'radix <r> arity <n>'");
  }

  if (lines.size() < 3) throw parse_error(3, "missing symbol line");
  const std::vector<std::string_view> symbol_tokens = split_tokens(lines[2]);
  if (symbol_tokens.size() != radix) {
    throw parse_error(3, "expected " + std::to_string(radix) + " symbols, got " +
                             std::to_string(symbol_tokens.size()));
  }
  std::vector<std::string> symbols(symbol_tokens.begin(), symbol_tokens.end());
  std::optional<alphabet> alpha;
  try {
    alpha.emplace(std::move(symbols));
  } catch (const invalid_alphabet& e) {
    throw parse_error(3, e.what());
  }

  std::vector<std::string> values;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    for (std::string_view token : split_tokens(lines[i])) {
      values.emplace_back(token);
    }
  }
  return make_table(std::move(*alpha), arity, values);
}

std::string emit_vector_line(const truth_table& f, vector_order order) {
  std::string out = "[";
  const std::uint64_t cells = f.num_cells();
  for (std::uint64_t i = 0; i < cells; ++i) {
    const std::uint64_t a = order == vector_order::table_order ? i : cells - 1 - i;
    if (i) out += ' ';
    out += f.alpha().symbol(f.values()[a]);
  }
  out += ']';
  return out;
}

truth_table parse_vector_line(std::string_view line, const alphabet& alpha,
                              vector_order order) {
  const std::size_t open = line.find('[');
  const std::size_t close = line.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw parse_error(1, "expected a bracketed vector line '[v1 v2 ...]'");
  }
  if (!split_tokens(line.substr(0, open)).empty() ||
      !split_tokens(line.substr(close + 1)).empty()) {
    throw parse_error(1, "unexpected text outside the brackets");
  }

  const std::vector<std::string_view> tokens = split_tokens(line.substr(open + 1, close - open - 1));
  std::vector<value_index> values;
  values.reserve(tokens.size());
  for (std::string_view token : tokens) {
    values.push_back(alpha.index_of(token));
  }
  if (order == vector_order::paper_order) {
    std::reverse(values.begin(), values.end());
  }

  // The arity is implied: the count must be r^n for some n.
  std::uint64_t cells = 1;
  std::uint32_t arity = 0;
  while (cells < values.size()) {
    cells *= alpha.radix();
    ++arity;
  }
  if (cells != values.size()) {
    throw length_mismatch("a vector line of " + std::to_string(values.size()) +
                          " values is not r^n for radix " + std::to_string(alpha.radix()));
  }
  return truth_table(alpha, arity, std::move(values));
}

}  // namespace mvlf
