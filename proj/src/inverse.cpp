#include "mvlf/inverse.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace mvlf {

namespace {

constexpr std::uint64_t no_binder = std::numeric_limits<std::uint64_t>::max();

void check_common_alphabet_and_arity(const truth_table& reference, const truth_table& t,
                                     const std::string& role) {
  if (!(t.alpha() == reference.alpha())) {
    throw composition_spec_error(role + " uses a different alphabet");
  }
  if (t.arity() != reference.arity()) {
    throw composition_spec_error(role + " has arity " + std::to_string(t.arity()) +
                                 ", expected " + std::to_string(reference.arity()));
  }
}

}  // namespace

partial_table::partial_table(alphabet alpha, std::uint32_t arity)
    : alpha_(std::move(alpha)), arity_(arity) {
  cells_.resize(cell_count(alpha_.radix(), arity_));
}

bool partial_table::is_bound(table_address address) const {
  return value_at(address).has_value();
}

std::optional<value_index> partial_table::value_at(table_address address) const {
  if (address >= cells_.size()) {
    throw address_out_of_range("address " + std::to_string(address) + " is out of range for " +
                               std::to_string(cells_.size()) + " cells");
  }
  return cells_[address];
}

void partial_table::bind(table_address address, value_index value) {
  if (address >= cells_.size()) {
    throw address_out_of_range("address " + std::to_string(address) + " is out of range for " +
                               std::to_string(cells_.size()) + " cells");
  }
  if (value >= alpha_.radix()) {
    throw invalid_digit("value-index " + std::to_string(value) + " is out of range for radix " +
                        std::to_string(alpha_.radix()));
  }
  std::optional<value_index>& cell = cells_[address];
  if (cell.has_value()) {
    if (*cell != value) {
      throw invalid_digit("cell " + std::to_string(address) + " is already bound to '" +
                          alpha_.symbol(*cell) + "'");
    }
    return;
  }
  cell = value;
  ++bound_;
}

std::vector<table_address> partial_table::free_addresses() const {
  std::vector<table_address> free;
  free.reserve(free_count());
  for (table_address a = 0; a < cells_.size(); ++a) {
    if (!cells_[a].has_value()) free.push_back(a);
  }
  return free;
}

truth_table partial_table::complete(std::span<const value_index> free_digits) const {
  if (free_digits.size() != free_count()) {
    throw length_mismatch("expected " + std::to_string(free_count()) + " free digits, got " +
                          std::to_string(free_digits.size()));
  }
  std::vector<value_index> values(cells_.size(), 0);
  std::size_t next_free = 0;
  for (table_address a = 0; a < cells_.size(); ++a) {
    values[a] = cells_[a].has_value() ? *cells_[a] : free_digits[next_free++];
  }
  return truth_table(alpha_, arity_, std::move(values));
}

g_solution solve_for_g(std::span<const truth_table> arguments, const truth_table& y) {
  if (arguments.empty()) {
    throw composition_spec_error("at least one argument function is required");
  }
  for (std::size_t k = 0; k < arguments.size(); ++k) {
    check_common_alphabet_and_arity(y, arguments[k],
                                    "argument function " + std::to_string(k + 1));
  }

  const value_index radix = y.radix();
  const std::uint32_t m = static_cast<std::uint32_t>(arguments.size());

  partial_table partial(y.alpha(), m);
  std::vector<std::uint64_t> first_binder(partial.num_cells(), no_binder);

  arg_tuple z(m, 0);
  for (std::uint64_t x = 0; x < y.num_cells(); ++x) {
    for (std::uint32_t j = 0; j < m; ++j) {
      z[j] = arguments[j].values()[x];
    }
    const table_address cell = address_of(z, radix);
    const value_index required = y.values()[x];
    const std::optional<value_index> bound = partial.value_at(cell);
    if (bound.has_value()) {
      if (*bound != required) {
        throw inconsistent_error(
            first_binder[cell], x,
            "argument addresses " + std::to_string(first_binder[cell]) + " and " +
                std::to_string(x) + " produce the same inner tuple but require values '" +
                y.alpha().symbol(*bound) + "' and '" + y.alpha().symbol(required) + "'");
      }
      continue;
    }
    partial.bind(cell, required);
    first_binder[cell] = x;
  }

  const std::uint64_t bound_cells = partial.bound_count();
  const std::uint64_t free_cells = partial.free_count();
  solution_count solutions = solution_count::power(radix, free_cells);
  return g_solution{std::move(partial), bound_cells, free_cells, std::move(solutions)};
}

g_solution_stream::g_solution_stream(g_solution solution, std::uint64_t first_index)
    : partial_(std::move(solution.partial)),
      free_addresses_(partial_.free_addresses()),
      cursor_(static_cast<unsigned long>(first_index)),
      total_(solution.solutions.value()) {}

std::optional<truth_table> g_solution_stream::next() {
  if (cursor_ >= total_) return std::nullopt;

  // Mixed-radix decode of the cursor, first free address most significant.
  const value_index radix = partial_.radix();
  std::vector<value_index> digits(free_addresses_.size(), 0);
  mpz_class q = cursor_;
  for (std::size_t i = digits.size(); i > 0; --i) {
    digits[i - 1] = static_cast<value_index>(mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), radix));
  }
  ++cursor_;
  return partial_.complete(digits);
}

std::vector<truth_table> enumerate_g_solutions(const g_solution& solution, std::uint64_t limit) {
  std::vector<truth_table> out;
  g_solution_stream stream(solution);
  for (std::uint64_t i = 0; i < limit; ++i) {
    std::optional<truth_table> t = stream.next();
    if (!t.has_value()) break;
    out.push_back(std::move(*t));
  }
  return out;
}

f_solution_space solve_for_f(const truth_table& g, const truth_table& y,
                             const std::map<std::uint32_t, truth_table>& known) {
  if (g.arity() == 0) {
    throw composition_spec_error("the transforming function must take at least one argument");
  }
  if (!(g.alpha() == y.alpha())) {
    throw composition_spec_error("the transforming and resultant functions use different alphabets");
  }
  const std::uint32_t m = g.arity();
  for (const auto& [position, table] : known) {
    if (position >= m) {
      throw composition_spec_error("known position " + std::to_string(position) +
                                   " is out of range for " + std::to_string(m) + " arguments");
    }
    check_common_alphabet_and_arity(y, table, "known function at position " + std::to_string(position));
  }

  std::vector<std::uint32_t> unknown;
  for (std::uint32_t j = 0; j < m; ++j) {
    if (!known.contains(j)) unknown.push_back(j);
  }
  const std::uint32_t u = static_cast<std::uint32_t>(unknown.size());
  const value_index radix = y.radix();
  const std::uint64_t assignments = cell_count(radix, u);

  f_solution_space space{y.alpha(), y.arity(), std::move(unknown), {}, solution_count(1)};
  space.admissible.resize(y.num_cells());

  arg_tuple z(m, 0);
  for (std::uint64_t x = 0; x < y.num_cells(); ++x) {
    for (const auto& [position, table] : known) {
      z[position] = table.values()[x];
    }
    const value_index required = y.values()[x];
    std::vector<std::uint64_t>& admitted = space.admissible[x];
    for (std::uint64_t v = 0; v < assignments; ++v) {
      const arg_tuple digits = tuple_from_address(v, radix, u);
      for (std::uint32_t i = 0; i < u; ++i) {
        z[space.unknown_positions[i]] = digits[i];
      }
      if (g.value_at(address_of(z, radix)) == required) {
        admitted.push_back(v);
      }
    }
    space.solutions *= solution_count(admitted.size());
  }
  return space;
}

solution_count count_f_solutions(const f_solution_space& space) {
  solution_count product(1);
  for (const std::vector<std::uint64_t>& set : space.admissible) {
    product *= solution_count(set.size());
  }
  return product;
}

f_solution_stream::f_solution_stream(f_solution_space space)
    : space_(std::move(space)), cursor_(0), total_(count_f_solutions(space_).value()) {}

std::optional<f_assignment> f_solution_stream::next() {
  if (cursor_ >= total_) return std::nullopt;

  // Mixed-radix decode over per-address set sizes, address 0 most
  // significant.
  const std::size_t addresses = space_.admissible.size();
  std::vector<std::size_t> choice(addresses, 0);
  mpz_class q = cursor_;
  for (std::size_t i = addresses; i > 0; --i) {
    const unsigned long base = space_.admissible[i - 1].size();
    choice[i - 1] = static_cast<std::size_t>(mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base));
  }
  ++cursor_;

  const value_index radix = space_.alpha.radix();
  const std::uint32_t u = static_cast<std::uint32_t>(space_.unknown_positions.size());
  std::vector<std::vector<value_index>> values(u,
                                               std::vector<value_index>(addresses, 0));
  for (std::size_t x = 0; x < addresses; ++x) {
    const std::uint64_t encoded = space_.admissible[x][choice[x]];
    const arg_tuple digits = tuple_from_address(encoded, radix, u);
    for (std::uint32_t i = 0; i < u; ++i) {
      values[i][x] = digits[i];
    }
  }

  f_assignment assignment;
  assignment.reserve(u);
  for (std::uint32_t i = 0; i < u; ++i) {
    assignment.emplace_back(space_.alpha, space_.domain_arity, std::move(values[i]));
  }
  return assignment;
}

std::vector<f_assignment> enumerate_f_solutions(const f_solution_space& space,
                                                std::uint64_t limit) {
  std::vector<f_assignment> out;
  f_solution_stream stream(space);
  for (std::uint64_t i = 0; i < limit; ++i) {
    std::optional<f_assignment> a = stream.next();
    if (!a.has_value()) break;
    out.push_back(std::move(*a));
  }
  return out;
}

}  // namespace mvlf
