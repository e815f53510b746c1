#pragma once

#include <string>
#include <string_view>

#include "mvlf/truth_table.hpp"

namespace mvlf {

/// Self-describing text form:
///   line 1: `mvlf 1`
///   line 2: `radix <r> arity <n>`
///   line 3: symbols, space-separated, in alphabet order
///   line 4: values in ascending address order, space-separated
/// LF line endings, deterministic bytes.
std::string emit_text(const truth_table& f);

/// Inverse of emit_text; accepts values split across any number of lines.
/// Throws parse_error(line, reason) for a malformed header, length_mismatch
/// for a wrong value count, unknown_symbol for a value outside the alphabet.
truth_table parse_text(std::string_view document);

/// Order of a bracketed vector line. table_order lists values by ascending
/// address; paper_order lists them by descending address, which is the
/// bracket notation commonly used for hand-written tables.
enum class vector_order { table_order, paper_order };

/// `[` value (space value)* `]`
std::string emit_vector_line(const truth_table& f, vector_order order);

/// Parses a bracketed vector line against a known alphabet. The arity is
/// inferred from the value count, which must equal r^n for some n.
truth_table parse_vector_line(std::string_view line, const alphabet& alpha,
                              vector_order order);

}  // namespace mvlf
