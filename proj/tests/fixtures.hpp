#pragma once

// Shared example functions used across the test suites: a 4-valued unary
// function, three ternary binary argument functions, the ternary 3-ary
// transforming function, and the table their composition produces.

#include <string>
#include <vector>

#include "mvlf/truth_table.hpp"

namespace fixtures {

inline mvlf::alphabet abc() {
  return mvlf::alphabet({"a", "b", "c"});
}

inline mvlf::alphabet abcd() {
  return mvlf::alphabet({"a", "b", "c", "d"});
}

inline mvlf::truth_table from_symbols(const mvlf::alphabet& alpha, std::uint32_t arity,
                                      const std::vector<std::string>& values) {
  return mvlf::make_table(alpha, arity, values);
}

// 4-valued unary function: f(a)=a, f(b)=a, f(c)=c, f(d)=b.
inline mvlf::truth_table unary4() {
  return from_symbols(abcd(), 1, {"a", "a", "c", "b"});
}

// Ternary binary argument functions over {a,b,c}.
inline mvlf::truth_table arg_f1() {
  return from_symbols(abc(), 2, {"a", "c", "c", "b", "b", "a", "a", "a", "b"});
}

inline mvlf::truth_table arg_f2() {
  return from_symbols(abc(), 2, {"a", "c", "b", "a", "c", "a", "b", "a", "c"});
}

inline mvlf::truth_table arg_f3() {
  return from_symbols(abc(), 2, {"c", "c", "b", "c", "c", "c", "b", "c", "b"});
}

inline std::vector<mvlf::truth_table> arg_functions() {
  return {arg_f1(), arg_f2(), arg_f3()};
}

// Ternary 3-ary transforming function.
inline mvlf::truth_table transform_g() {
  return from_symbols(abc(), 3,
                      {"a", "a", "c", "c", "c", "a", "b", "a", "a",
                       "c", "b", "a", "c", "b", "a", "c", "b", "a",
                       "b", "b", "b", "a", "b", "a", "c", "c", "a"});
}

// The composition of transform_g with the three argument functions.
inline mvlf::truth_table result_y() {
  return from_symbols(abc(), 2, {"c", "a", "b", "a", "a", "c", "c", "c", "b"});
}

}  // namespace fixtures
