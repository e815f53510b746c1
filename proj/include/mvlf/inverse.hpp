#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mvlf/compose.hpp"
#include "mvlf/counting.hpp"
#include "mvlf/errors.hpp"
#include "mvlf/truth_table.hpp"

namespace mvlf {

/// A truth table under construction: every cell is either bound to a value
/// or still free.
class partial_table {
public:
  partial_table(alphabet alpha, std::uint32_t arity);

  const alphabet& alpha() const { return alpha_; }
  std::uint32_t arity() const { return arity_; }
  value_index radix() const { return alpha_.radix(); }
  std::uint64_t num_cells() const { return cells_.size(); }

  bool is_bound(table_address address) const;
  std::optional<value_index> value_at(table_address address) const;

  /// Binds a free cell; rebinding with the same value is a no-op and
  /// rebinding with a different value throws invalid_digit.
  void bind(table_address address, value_index value);

  std::uint64_t bound_count() const { return bound_; }
  std::uint64_t free_count() const { return cells_.size() - bound_; }

  /// Addresses of the free cells, ascending.
  std::vector<table_address> free_addresses() const;

  /// Completes the table, filling free cells from digits (one per free
  /// address, ascending address order).
  truth_table complete(std::span<const value_index> free_digits) const;

private:
  alphabet alpha_;
  std::uint32_t arity_;
  std::vector<std::optional<value_index>> cells_;
  std::uint64_t bound_ = 0;
};

/// Result of the first reverse task: the cells of the transforming function
/// forced by the given arguments and result, plus the exact number of
/// completions r^free_count.
struct g_solution {
  partial_table partial;
  std::uint64_t bound_cells;
  std::uint64_t free_cells;
  solution_count solutions;
};

/// Recovers the transforming function from the argument functions and the
/// resultant function. Every argument address x forces cell address(z) of
/// the m-ary table, where z = (f_1(x), ..., f_m(x)), to y(x); all other
/// cells stay free. Throws inconsistent_error with a witness pair of
/// argument addresses when two tuples force different values into one cell.
g_solution solve_for_g(std::span<const truth_table> arguments, const truth_table& y);

/// Streams the completions of a g_solution in ascending order of the
/// free-cell assignment read as a mixed-radix number (first free address
/// most significant). Single consumer.
class g_solution_stream {
public:
  explicit g_solution_stream(g_solution solution, std::uint64_t first_index = 0);

  std::optional<truth_table> next();

private:
  partial_table partial_;
  std::vector<table_address> free_addresses_;
  mpz_class cursor_;
  mpz_class total_;
};

/// First `limit` completions, in stream order.
std::vector<truth_table> enumerate_g_solutions(const g_solution& solution, std::uint64_t limit);

/// Result of the second reverse task. For each argument address x the
/// admissible set lists the value assignments to the unknown positions that
/// make g agree with y at x, encoded as mixed-radix numbers over the unknown
/// positions (first unknown most significant) and sorted ascending. The
/// constraint decomposes independently per address, so the solution count is
/// the product of the set sizes; an empty set anywhere means no solution.
struct f_solution_space {
  alphabet alpha;
  std::uint32_t domain_arity;                    // n
  std::vector<std::uint32_t> unknown_positions;  // 0-based into g's arguments, ascending
  std::vector<std::vector<std::uint64_t>> admissible;  // one set per address
  solution_count solutions;
};

/// One table per unknown position, in unknown_positions order.
using f_assignment = std::vector<truth_table>;

/// Recovers unknown argument functions given the transforming function, the
/// resultant function, and the known argument functions. `known` maps
/// 0-based positions of g's argument list to tables of y's arity; every
/// position not in `known` is solved for. Absence of solutions is a count of
/// zero, not an error.
f_solution_space solve_for_f(const truth_table& g, const truth_table& y,
                             const std::map<std::uint32_t, truth_table>& known);

/// Product of the admissible-set sizes, exact.
solution_count count_f_solutions(const f_solution_space& space);

/// Streams complete assignments in ascending lexicographic order of
/// per-address admissible-set choices (address 0 most significant).
class f_solution_stream {
public:
  explicit f_solution_stream(f_solution_space space);

  std::optional<f_assignment> next();

private:
  f_solution_space space_;
  mpz_class cursor_;
  mpz_class total_;
};

/// First `limit` assignments, in stream order.
std::vector<f_assignment> enumerate_f_solutions(const f_solution_space& space,
                                                std::uint64_t limit);

}  // namespace mvlf
