// Command-line front end: evaluation, composition, both reverse tasks,
// function counting, and format conversion for r-valued truth tables.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mvlf/binary_format.hpp"
#include "mvlf/compose.hpp"
#include "mvlf/counting.hpp"
#include "mvlf/errors.hpp"
#include "mvlf/inverse.hpp"
#include "mvlf/text_format.hpp"
#include "mvlf/truth_table.hpp"

namespace {

namespace fs = std::filesystem;
using namespace mvlf;

enum class table_format { text, binary, vector_line };

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw io_error("cannot read '" + path.string() + "'");
  }
  return std::move(buffer).str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out.good()) {
    throw io_error("cannot write '" + path.string() + "'");
  }
}

std::optional<table_format> detect_format(const std::string& bytes) {
  if (bytes.rfind("ATLF", 0) == 0) return table_format::binary;
  const std::size_t first = bytes.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return std::nullopt;
  if (bytes[first] == '[') return table_format::vector_line;
  if (bytes.compare(first, 4, "mvlf") == 0) return table_format::text;
  return std::nullopt;
}

// Loads a self-describing table file (text or binary).
truth_table load_table(const fs::path& path) {
  const std::string bytes = read_file(path);
  const std::optional<table_format> format = detect_format(bytes);
  if (!format.has_value() || *format == table_format::vector_line) {
    throw format_error("'" + path.string() +
                       "' is not a table file (vector lines need --alphabet via convert)");
  }
  if (*format == table_format::binary) {
    std::istringstream in(bytes, std::ios::binary);
    return read_binary(in);
  }
  return parse_text(bytes);
}

void save_text_table(const fs::path& path, const truth_table& t) {
  write_file(path, emit_text(t));
}

arg_tuple tuple_from_symbols(const alphabet& alpha, const std::vector<std::string>& symbols) {
  arg_tuple tuple;
  tuple.reserve(symbols.size());
  for (const std::string& s : symbols) {
    tuple.push_back(alpha.index_of(s));
  }
  return tuple;
}

alphabet alphabet_from_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::vector<std::string> symbols{std::istream_iterator<std::string>(in),
                                   std::istream_iterator<std::string>()};
  return alphabet(std::move(symbols));
}

std::string solution_file_name(std::uint64_t index) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "sol-%06llu.mvlf",
                static_cast<unsigned long long>(index));
  return buffer;
}

std::string solution_file_name(std::uint64_t index, std::uint32_t position) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "sol-%06llu-f%u.mvlf",
                static_cast<unsigned long long>(index), position + 1);
  return buffer;
}

struct eval_options {
  std::string table;
  std::vector<std::string> symbols;
  bool stored = false;
};

int run_eval(const eval_options& opt) {
  if (opt.stored) {
    const stored_table stored{fs::path(opt.table)};
    const arg_tuple tuple = tuple_from_symbols(stored.alpha(), opt.symbols);
    std::cout << stored.evaluate_symbol(tuple) << "\n";
  } else {
    const truth_table table = load_table(opt.table);
    const arg_tuple tuple = tuple_from_symbols(table.alpha(), opt.symbols);
    std::cout << evaluate_symbol(table, tuple) << "\n";
  }
  return 0;
}

struct compose_options {
  std::string transform;
  std::vector<std::string> arguments;
  std::string out;
};

int run_compose(const compose_options& opt) {
  truth_table g = load_table(opt.transform);
  std::vector<truth_table> args;
  args.reserve(opt.arguments.size());
  for (const std::string& path : opt.arguments) {
    args.push_back(load_table(path));
  }
  const truth_table y = compose(composition_spec(std::move(g), std::move(args)));
  save_text_table(opt.out, y);
  return 0;
}

struct solve_g_options {
  std::vector<std::string> tables;  // f_1 ... f_m then y
  bool count = false;
  bool partial = false;
  std::optional<std::uint64_t> enumerate;
  std::string out_dir = ".";
};

int run_solve_g(const solve_g_options& opt) {
  const int modes = int(opt.count) + int(opt.partial) + int(opt.enumerate.has_value());
  if (modes != 1) {
    throw composition_spec_error("pick exactly one of --count, --partial, --enumerate");
  }

  std::vector<truth_table> args;
  for (std::size_t i = 0; i + 1 < opt.tables.size(); ++i) {
    args.push_back(load_table(opt.tables[i]));
  }
  const truth_table y = load_table(opt.tables.back());

  const g_solution sol = solve_for_g(args, y);

  if (opt.count) {
    std::cout << sol.solutions.str() << "\n";
  } else if (opt.partial) {
    std::cout << "radix " << sol.partial.radix() << "\n"
              << "arity " << sol.partial.arity() << "\n"
              << "cells " << sol.partial.num_cells() << "\n"
              << "bound " << sol.bound_cells << "\n"
              << "free " << sol.free_cells << "\n"
              << "solutions " << sol.solutions.str() << "\n";
    for (table_address cell = 0; cell < sol.partial.num_cells(); ++cell) {
      if (const std::optional<value_index> v = sol.partial.value_at(cell); v.has_value()) {
        std::cout << "cell " << cell << " = " << sol.partial.alpha().symbol(*v) << "\n";
      }
    }
  } else {
    fs::create_directories(opt.out_dir);
    g_solution_stream stream(sol);
    for (std::uint64_t i = 0; i < *opt.enumerate; ++i) {
      const std::optional<truth_table> t = stream.next();
      if (!t.has_value()) break;
      save_text_table(fs::path(opt.out_dir) / solution_file_name(i + 1), *t);
    }
  }
  return 0;
}

struct solve_f_options {
  std::string transform;
  std::string result;
  std::vector<std::string> known;    // k=path, 1-based
  std::vector<std::uint32_t> unknown;  // 1-based
  bool count = false;
  std::optional<std::uint64_t> enumerate;
  std::string out_dir = ".";
};

int run_solve_f(const solve_f_options& opt) {
  const int modes = int(opt.count) + int(opt.enumerate.has_value());
  if (modes != 1) {
    throw composition_spec_error("pick exactly one of --count, --enumerate");
  }

  const truth_table g = load_table(opt.transform);
  const truth_table y = load_table(opt.result);
  const std::uint32_t m = g.arity();

  std::map<std::uint32_t, truth_table> known;
  for (const std::string& entry : opt.known) {
    const std::size_t eq = entry.find('=');
    std::uint32_t position = 0;
    const char* digits_end = entry.data() + (eq == std::string::npos ? 0 : eq);
    const auto [ptr, ec] = std::from_chars(entry.data(), digits_end, position);
    if (eq == std::string::npos || ec != std::errc() || ptr != digits_end) {
      throw composition_spec_error("--known expects k=path with a 1-based position, got '" +
                                   entry + "'");
    }
    if (position < 1 || position > m) {
      throw composition_spec_error("known position " + std::to_string(position) +
                                   " is out of range 1.." + std::to_string(m));
    }
    if (!known.emplace(position - 1, load_table(entry.substr(eq + 1))).second) {
      throw composition_spec_error("position " + std::to_string(position) + " given twice");
    }
  }

  // known and unknown together must cover 1..m exactly once each.
  std::vector<bool> covered(m, false);
  for (const auto& [position, table] : known) covered[position] = true;
  for (std::uint32_t position : opt.unknown) {
    if (position < 1 || position > m) {
      throw composition_spec_error("unknown position " + std::to_string(position) +
                                   " is out of range 1.." + std::to_string(m));
    }
    if (covered[position - 1]) {
      throw composition_spec_error("position " + std::to_string(position) +
                                   " is both known and unknown");
    }
    covered[position - 1] = true;
  }
  for (std::uint32_t j = 0; j < m; ++j) {
    if (!covered[j]) {
      throw composition_spec_error("position " + std::to_string(j + 1) +
                                   " is neither known nor unknown");
    }
  }

  const f_solution_space space = solve_for_f(g, y, known);

  if (space.solutions.is_zero()) {
    std::cout << "no solution\n";
    return 0;
  }
  if (opt.count) {
    std::cout << space.solutions.str() << "\n";
  } else {
    fs::create_directories(opt.out_dir);
    f_solution_stream stream(space);
    for (std::uint64_t i = 0; i < *opt.enumerate; ++i) {
      const std::optional<f_assignment> assignment = stream.next();
      if (!assignment.has_value()) break;
      for (std::size_t j = 0; j < assignment->size(); ++j) {
        save_text_table(fs::path(opt.out_dir) /
                            solution_file_name(i + 1, space.unknown_positions[j]),
                        (*assignment)[j]);
      }
    }
  }
  return 0;
}

struct count_options {
  std::uint32_t radix = 0;
  std::uint32_t arity = 0;
};

int run_count(const count_options& opt) {
  std::cout << count_functions(opt.radix, opt.arity).str() << "\n";
  return 0;
}

struct convert_options {
  std::string in;
  std::string out;
  std::string to;
  bool paper_order = false;
  std::string alphabet_spec;
};

int run_convert(const convert_options& opt) {
  const std::string bytes = read_file(opt.in);
  const std::optional<table_format> format = detect_format(bytes);
  if (!format.has_value()) {
    throw format_error("cannot detect the format of '" + opt.in + "'");
  }

  const vector_order order =
      opt.paper_order ? vector_order::paper_order : vector_order::table_order;

  truth_table table = [&] {
    switch (*format) {
      case table_format::binary: {
        std::istringstream in(bytes, std::ios::binary);
        return read_binary(in);
      }
      case table_format::vector_line: {
        if (opt.alphabet_spec.empty()) {
          throw format_error("a bare vector line needs --alphabet \"s1 s2 ...\"");
        }
        return parse_vector_line(bytes, alphabet_from_spec(opt.alphabet_spec), order);
      }
      case table_format::text:
        return parse_text(bytes);
    }
    throw format_error("unreachable");
  }();

  if (opt.to == "text") {
    write_file(opt.out, emit_text(table));
  } else if (opt.to == "binary") {
    std::ostringstream out(std::ios::binary);
    write_binary(table, out);
    write_file(opt.out, std::move(out).str());
  } else {
    write_file(opt.out, emit_vector_line(table, order) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabulated r-valued logic functions: evaluate, compose, invert, convert"};
  app.require_subcommand(1);

  eval_options eval_opt;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a table at an argument tuple");
  eval_cmd->add_option("table", eval_opt.table, "table file (text or binary)")->required();
  eval_cmd->add_option("symbols", eval_opt.symbols, "argument tuple, one symbol per variable");
  eval_cmd->add_flag("--stored", eval_opt.stored,
                     "evaluate against the file with positioned reads, without loading it");

  compose_options compose_opt;
  CLI::App* compose_cmd =
      app.add_subcommand("compose", "Tabulate g(f_1(x), ..., f_m(x)) over all tuples");
  compose_cmd->add_option("g", compose_opt.transform, "transforming function")->required();
  compose_cmd->add_option("f", compose_opt.arguments, "argument functions, one per variable of g")
      ->required();
  compose_cmd->add_option("-o,--out", compose_opt.out, "output table (text format)")->required();

  solve_g_options solve_g_opt;
  CLI::App* solve_g_cmd = app.add_subcommand(
      "solve-g", "Recover the transforming function from arguments and result");
  solve_g_cmd
      ->add_option("tables", solve_g_opt.tables, "argument tables f_1 ... f_m, then the result y")
      ->required()
      ->expected(2, -1);
  solve_g_cmd->add_flag("--count", solve_g_opt.count, "print the exact number of solutions");
  solve_g_cmd->add_flag("--partial", solve_g_opt.partial, "print the bound/free cell map");
  solve_g_cmd->add_option("--enumerate", solve_g_opt.enumerate,
                          "write up to N solutions as numbered files");
  solve_g_cmd->add_option("--out-dir", solve_g_opt.out_dir, "directory for enumerated solutions");

  solve_f_options solve_f_opt;
  CLI::App* solve_f_cmd = app.add_subcommand(
      "solve-f", "Recover unknown argument functions from the transform and result");
  solve_f_cmd->add_option("g", solve_f_opt.transform, "transforming function")->required();
  solve_f_cmd->add_option("y", solve_f_opt.result, "resultant function")->required();
  solve_f_cmd->add_option("--known", solve_f_opt.known, "known argument, as k=path (1-based)");
  solve_f_cmd->add_option("--unknown", solve_f_opt.unknown, "unknown positions (1-based)");
  solve_f_cmd->add_flag("--count", solve_f_opt.count, "print the exact number of solutions");
  solve_f_cmd->add_option("--enumerate", solve_f_opt.enumerate,
                          "write up to N assignments as numbered files");
  solve_f_cmd->add_option("--out-dir", solve_f_opt.out_dir, "directory for enumerated solutions");

  count_options count_opt;
  CLI::App* count_cmd =
      app.add_subcommand("count", "Print the number of r-valued functions of n variables");
  count_cmd->add_option("radix", count_opt.radix, "number of values, r >= 2")->required();
  count_cmd->add_option("arity", count_opt.arity, "number of variables")->required();

  convert_options convert_opt;
  CLI::App* convert_cmd = app.add_subcommand("convert", "Convert between table formats");
  convert_cmd->add_option("in", convert_opt.in, "input file (format auto-detected)")->required();
  convert_cmd->add_option("out", convert_opt.out, "output file")->required();
  convert_cmd->add_option("--to", convert_opt.to, "target format")
      ->required()
      ->check(CLI::IsMember({"text", "binary", "vector"}));
  convert_cmd->add_flag("--paper-order", convert_opt.paper_order,
                        "vector lines list values from highest address to lowest");
  convert_cmd->add_option("--alphabet", convert_opt.alphabet_spec,
                          "space-separated symbols, required when reading a bare vector line");

  try {
    app.parse(argc, argv);
    if (*eval_cmd) return run_eval(eval_opt);
    if (*compose_cmd) return run_compose(compose_opt);
    if (*solve_g_cmd) return run_solve_g(solve_g_opt);
    if (*solve_f_cmd) return run_solve_f(solve_f_opt);
    if (*count_cmd) return run_count(count_opt);
    if (*convert_cmd) return run_convert(convert_opt);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const inconsistent_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mvlf::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
