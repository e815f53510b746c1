#include "mvlf/counting.hpp"

#include "mvlf/truth_table.hpp"

namespace mvlf {

solution_count solution_count::power(value_index base, std::uint64_t exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return solution_count(std::move(result));
}

bool solution_count::fits_u64() const {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t solution_count::as_u64() const {
  if (!fits_u64()) {
    throw resource_limit("count " + str() + " does not fit 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

solution_count count_functions(value_index radix, std::uint32_t arity) {
  // cell_count validates radix >= 2; the exponent r^n must itself fit
  // 64 bits for the count to be representable at all.
  const std::uint64_t exponent = cell_count(radix, arity);
  return solution_count::power(radix, exponent);
}

}  // namespace mvlf
