#include "mvlf/compose.hpp"

#include <utility>

namespace mvlf {

composition_spec::composition_spec(truth_table transform, std::vector<truth_table> arguments)
    : transform_(std::move(transform)), arguments_(std::move(arguments)) {
  if (transform_.arity() == 0) {
    throw composition_spec_error("the transforming function must take at least one argument");
  }
  if (arguments_.size() != transform_.arity()) {
    throw composition_spec_error("the transforming function takes " +
                                 std::to_string(transform_.arity()) + " arguments, got " +
                                 std::to_string(arguments_.size()) + " argument functions");
  }
  const std::uint32_t n = arguments_.front().arity();
  for (std::size_t k = 0; k < arguments_.size(); ++k) {
    const truth_table& f = arguments_[k];
    if (!(f.alpha() == transform_.alpha())) {
      throw composition_spec_error("argument function " + std::to_string(k + 1) +
                                   " uses a different alphabet");
    }
    if (f.arity() != n) {
      throw composition_spec_error("argument function " + std::to_string(k + 1) + " has arity " +
                                   std::to_string(f.arity()) + ", expected " + std::to_string(n));
    }
  }
}

value_index evaluate(const truth_table& f, std::span<const value_index> tuple) {
  if (tuple.size() != f.arity()) {
    throw arity_mismatch("tuple of length " + std::to_string(tuple.size()) +
                         " fed to a function of arity " + std::to_string(f.arity()));
  }
  return f.value_at(address_of(tuple, f.radix()));
}

const std::string& evaluate_symbol(const truth_table& f, std::span<const value_index> tuple) {
  return f.alpha().symbol(evaluate(f, tuple));
}

truth_table compose(const composition_spec& spec, const composition_options& options) {
  const std::uint32_t n = spec.inner_arity();
  const std::uint32_t m = spec.outer_arity();
  const value_index radix = spec.radix();

  const std::uint64_t cells = cell_count(radix, n);
  if (cells > options.cell_budget) {
    throw resource_limit("result table of " + std::to_string(cells) +
                         " cells exceeds the cell budget of " +
                         std::to_string(options.cell_budget));
  }

  const truth_table& g = spec.transform();
  const std::vector<truth_table>& args = spec.arguments();

  // The k-th value of every argument function is its value at the tuple with
  // address k, so the inner tuple can be gathered without decoding x.
  std::vector<value_index> result(cells, 0);
  arg_tuple z(m, 0);
  for (std::uint64_t x = 0; x < cells; ++x) {
    for (std::uint32_t j = 0; j < m; ++j) {
      z[j] = args[j].values()[x];
    }
    result[x] = g.value_at(address_of(z, radix));
  }
  return truth_table(g.alpha(), n, std::move(result));
}

}  // namespace mvlf
