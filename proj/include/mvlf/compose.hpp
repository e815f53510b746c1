#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvlf/errors.hpp"
#include "mvlf/truth_table.hpp"

namespace mvlf {

inline constexpr std::uint64_t default_cell_budget = std::uint64_t{1} << 28;

struct composition_options {
  /// compose refuses to materialize result tables larger than this.
  std::uint64_t cell_budget = default_cell_budget;
};

/// A composition instance: an m-ary transforming function together with the
/// ordered list of m argument functions, all of one arity n over one
/// alphabet. The constructor validates the instance and throws
/// composition_spec_error when the tables do not fit together (including
/// m = 0, which is rejected).
class composition_spec {
public:
  composition_spec(truth_table transform, std::vector<truth_table> arguments);

  const truth_table& transform() const { return transform_; }
  const std::vector<truth_table>& arguments() const { return arguments_; }

  /// n, the arity of each argument function and of the result.
  std::uint32_t inner_arity() const { return arguments_.front().arity(); }
  /// m, the arity of the transforming function.
  std::uint32_t outer_arity() const { return transform_.arity(); }

  value_index radix() const { return transform_.radix(); }

private:
  truth_table transform_;
  std::vector<truth_table> arguments_;
};

/// Two-step evaluation: form the numeric address of the tuple, then look the
/// value up. Throws arity_mismatch and invalid_digit.
value_index evaluate(const truth_table& f, std::span<const value_index> tuple);

/// Same lookup, returning the symbol.
const std::string& evaluate_symbol(const truth_table& f, std::span<const value_index> tuple);

/// Tabulates y(x) = g(f_1(x), ..., f_m(x)) over all r^n argument tuples in
/// ascending address order. Throws resource_limit when r^n exceeds the cell
/// budget.
truth_table compose(const composition_spec& spec, const composition_options& options = {});

}  // namespace mvlf
