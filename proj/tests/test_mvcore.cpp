#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "mvlf/counting.hpp"
#include "mvlf/errors.hpp"
#include "mvlf/truth_table.hpp"

using namespace mvlf;

TEST_CASE("alphabet validates its symbols") {
  CHECK_THROWS_AS(alphabet({"a"}), invalid_alphabet);
  CHECK_THROWS_AS(alphabet({}), invalid_alphabet);
  CHECK_THROWS_AS(alphabet({"a", "a"}), invalid_alphabet);
  CHECK_THROWS_AS(alphabet({"a", ""}), invalid_alphabet);
  CHECK_THROWS_AS(alphabet({"a", "b c"}), invalid_alphabet);

  const alphabet alpha({"lo", "mid", "hi"});
  CHECK(alpha.radix() == 3);
  CHECK(alpha.symbol(1) == "mid");
  CHECK(alpha.index_of("hi") == 2);
  CHECK(alpha.contains("lo"));
  CHECK(!alpha.contains("zz"));
  CHECK_THROWS_AS(alpha.symbol(3), invalid_digit);
  CHECK_THROWS_AS(alpha.index_of("zz"), unknown_symbol);
}

TEST_CASE("symbol and index lookups are mutually inverse") {
  const alphabet alpha({"a", "b", "c", "d", "e"});
  for (value_index i = 0; i < alpha.radix(); ++i) {
    CHECK(alpha.index_of(alpha.symbol(i)) == i);
  }
  for (const std::string& s : alpha.symbols()) {
    CHECK(alpha.symbol(alpha.index_of(s)) == s);
  }
}

TEST_CASE("address formation matches the standard row order") {
  // (a,a,c) and (b,a,a) sit at rows 2 and 9 of a ternary 3-ary table.
  CHECK(address_of(arg_tuple{0, 0, 2}, 3) == 2);
  CHECK(address_of(arg_tuple{1, 0, 0}, 3) == 9);
  CHECK(address_of(arg_tuple{2, 2, 2}, 3) == 26);
  CHECK(address_of(arg_tuple{0, 0, 0, 0}, 7) == 0);
  CHECK(address_of(arg_tuple{}, 2) == 0);

  CHECK_THROWS_AS(address_of(arg_tuple{3, 0}, 3), invalid_digit);
  CHECK_THROWS_AS(address_of(arg_tuple{0}, 1), invalid_radix);
}

TEST_CASE("tuple_from_address inverts address formation") {
  CHECK(tuple_from_address(9, 3, 3) == arg_tuple{1, 0, 0});
  CHECK(tuple_from_address(3, 4, 1) == arg_tuple{3});
  CHECK(tuple_from_address(0, 2, 2) == arg_tuple{0, 0});
  CHECK(tuple_from_address(0, 5, 0) == arg_tuple{});

  CHECK_THROWS_AS(tuple_from_address(27, 3, 3), address_out_of_range);
  CHECK_THROWS_AS(tuple_from_address(1, 2, 0), address_out_of_range);
}

TEST_CASE("address map is a bijection, exhaustively for r in [2,5], n in [0,4]") {
  for (value_index r = 2; r <= 5; ++r) {
    for (std::uint32_t n = 0; n <= 4; ++n) {
      const std::uint64_t cells = cell_count(r, n);
      std::set<table_address> seen;
      for (table_address k = 0; k < cells; ++k) {
        const arg_tuple t = tuple_from_address(k, r, n);
        REQUIRE(t.size() == n);
        REQUIRE(address_of(t, r) == k);
        seen.insert(address_of(t, r));
      }
      REQUIRE(seen.size() == cells);
    }
  }
}

TEST_CASE("address order equals lexicographic tuple order") {
  for (value_index r = 2; r <= 4; ++r) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const std::uint64_t cells = cell_count(r, n);
      arg_tuple previous = tuple_from_address(0, r, n);
      for (table_address k = 1; k < cells; ++k) {
        const arg_tuple current = tuple_from_address(k, r, n);
        REQUIRE(previous < current);
        previous = current;
      }
    }
  }
}

TEST_CASE("cell_count guards its domain") {
  CHECK(cell_count(2, 0) == 1);
  CHECK(cell_count(3, 3) == 27);
  CHECK(cell_count(2, 63) == (std::uint64_t{1} << 63));
  CHECK_THROWS_AS(cell_count(1, 2), invalid_radix);
  CHECK_THROWS_AS(cell_count(2, 64), resource_limit);
  CHECK_THROWS_AS(cell_count(3, 41), resource_limit);
}

TEST_CASE("make_table maps symbols and validates shape") {
  const truth_table t = fixtures::unary4();
  CHECK(t.arity() == 1);
  CHECK(t.radix() == 4);
  CHECK(t.num_cells() == 4);
  CHECK(t.symbol_at(0) == "a");
  CHECK(t.symbol_at(2) == "c");
  CHECK(t.symbol_at(3) == "b");

  SUBCASE("nullary constant") {
    const truth_table c = make_table(alphabet({"a", "b"}), 0, std::vector<std::string>{"b"});
    CHECK(c.num_cells() == 1);
    CHECK(c.symbol_at(0) == "b");
  }

  SUBCASE("wrong length") {
    const std::vector<std::string> eight(8, "a");
    CHECK_THROWS_AS(make_table(fixtures::abc(), 2, eight), length_mismatch);
  }

  SUBCASE("unknown symbol") {
    CHECK_THROWS_AS(make_table(fixtures::abc(), 1, std::vector<std::string>{"a", "b", "e"}),
                    unknown_symbol);
  }

  SUBCASE("value access is bounds checked") {
    CHECK_THROWS_AS(t.value_at(4), address_out_of_range);
  }

  SUBCASE("raw value-indices are range checked") {
    CHECK_THROWS_AS(truth_table(fixtures::abc(), 1, {0, 1, 3}), invalid_digit);
  }
}

TEST_CASE("count_functions returns r^(r^n) exactly") {
  CHECK(count_functions(4, 1) == 256ul);
  CHECK(count_functions(2, 1) == 4ul);
  CHECK(count_functions(2, 2) == 16ul);
  CHECK(count_functions(3, 2) == 19683ul);
  CHECK(count_functions(2, 4) == 65536ul);
  CHECK_THROWS_AS(count_functions(1, 1), invalid_radix);

  // Big-integer cross-check: 4^(4^2) = 4^16.
  CHECK(count_functions(4, 2).str() == "4294967296");
  // 2^(2^6) spills past 64 bits.
  CHECK(count_functions(2, 6).str() == "18446744073709551616");
}

TEST_CASE("count_functions agrees with exhaustive enumeration at desk scale") {
  struct shape {
    value_index r;
    std::uint32_t n;
    unsigned long expected;
  };
  for (const shape s : {shape{2, 1, 4}, shape{3, 1, 27}, shape{2, 2, 16}}) {
    unsigned long enumerated = 0;
    std::vector<std::string> pool = {"a", "b", "c"};
    alphabet alpha(std::vector<std::string>(pool.begin(), pool.begin() + s.r));
    oracles::for_each_table(alpha, s.n, [&](const truth_table&) { ++enumerated; });
    CHECK(enumerated == s.expected);
    CHECK(count_functions(s.r, s.n) == s.expected);
  }
}

TEST_CASE("solution_count arithmetic is exact") {
  CHECK(solution_count::power(3, 20).str() == "3486784401");
  CHECK(solution_count::power(2, 0) == 1ul);
  CHECK((solution_count(6) * solution_count(7)) == 42ul);
  CHECK(solution_count().is_zero());
  CHECK(!solution_count(1).is_zero());
  CHECK(solution_count(5) < solution_count(6));

  CHECK(solution_count::power(3, 20).fits_u64());
  CHECK(solution_count::power(3, 20).as_u64() == 3486784401ull);
  CHECK(!solution_count::power(2, 80).fits_u64());
  CHECK_THROWS_AS(solution_count::power(2, 80).as_u64(), resource_limit);
}

TEST_CASE("tables over different alphabets never compare equal") {
  const truth_table t1 = make_table(alphabet({"a", "b"}), 1, std::vector<std::string>{"a", "b"});
  const truth_table t2 = make_table(alphabet({"x", "y"}), 1, std::vector<std::string>{"x", "y"});
  CHECK(t1 == t1);
  CHECK(!(t1 == t2));
}
